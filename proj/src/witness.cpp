#include "rfg/witness.hpp"

#include <sstream>

namespace rfg {

std::string witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::symmetric_image: return "symmetric-image";
    case WitnessKind::congruence_mod_m: return "congruence-mod-m";
    case WitnessKind::tree_level: return "tree-level";
    case WitnessKind::residue_field: return "residue-field";
  }
  return "?";
}

std::string QuotientWitness::describe() const {
  std::ostringstream os;
  os << witness_kind_name(kind) << " order=" << order.to_string();
  switch (kind) {
    case WitnessKind::symmetric_image: {
      os << " degree=" << degree << " images=";
      for (std::size_t g = 0; g < images.size(); ++g) {
        if (g) os << ";";
        for (std::size_t i = 0; i < images[g].size(); ++i)
          os << (i ? "," : "") << int(images[g][i]) + 1;
      }
      break;
    }
    case WitnessKind::congruence_mod_m: {
      os << " mod=" << modulus;
      if (!residues.empty()) {
        os << " residues=";
        for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
      }
      break;
    }
    case WitnessKind::tree_level:
      os << " level=" << level;
      break;
    case WitnessKind::residue_field:
      os << " p=" << prime << " e=" << ideal_exponent << " f=" << residue_degree
         << " root=" << root;
      break;
  }
  return os.str();
}

std::string QuotientWitness::encode() const {
  std::ostringstream os;
  os << order.to_string() << "|";
  switch (kind) {
    case WitnessKind::symmetric_image: {
      os << "sym|" << degree << "|";
      for (std::size_t g = 0; g < images.size(); ++g) {
        if (g) os << ";";
        for (std::size_t i = 0; i < images[g].size(); ++i)
          os << (i ? "," : "") << int(images[g][i]);
      }
      break;
    }
    case WitnessKind::congruence_mod_m: {
      os << "mod|" << modulus << "|";
      for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
      break;
    }
    case WitnessKind::tree_level:
      os << "tree|" << level << "|";
      break;
    case WitnessKind::residue_field:
      os << "field|" << prime << "|" << ideal_exponent << "," << residue_degree << "," << root;
      break;
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::optional<QuotientWitness> QuotientWitness::decode(const std::string& s) {
  auto parts = split(s, '|');
  if (parts.size() < 3) return std::nullopt;
  QuotientWitness w;
  try {
    w.order = BigInt::from_decimal(parts[0]);
    const std::string& tag = parts[1];
    if (tag == "sym") {
      w.kind = WitnessKind::symmetric_image;
      w.degree = std::stoi(parts[2]);
      if (parts.size() > 3 && !parts[3].empty()) {
        for (const auto& img : split(parts[3], ';')) {
          std::vector<std::uint8_t> one;
          for (const auto& v : split(img, ',')) one.push_back(static_cast<std::uint8_t>(std::stoi(v)));
          w.images.push_back(std::move(one));
        }
      }
    } else if (tag == "mod") {
      w.kind = WitnessKind::congruence_mod_m;
      w.modulus = static_cast<std::uint32_t>(std::stoul(parts[2]));
      if (parts.size() > 3 && !parts[3].empty())
        for (const auto& v : split(parts[3], ',')) w.residues.push_back(static_cast<std::uint32_t>(std::stoul(v)));
    } else if (tag == "tree") {
      w.kind = WitnessKind::tree_level;
      w.level = std::stoi(parts[2]);
    } else if (tag == "field") {
      w.kind = WitnessKind::residue_field;
      w.prime = static_cast<std::uint32_t>(std::stoul(parts[2]));
      if (parts.size() > 3) {
        auto nums = split(parts[3], ',');
        if (nums.size() != 3) return std::nullopt;
        w.ideal_exponent = static_cast<unsigned>(std::stoul(nums[0]));
        w.residue_degree = static_cast<unsigned>(std::stoul(nums[1]));
        w.root = std::stoll(nums[2]);
      }
    } else {
      return std::nullopt;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return w;
}

}  // namespace rfg

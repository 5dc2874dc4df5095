#pragma once

#include <string>
#include <vector>

namespace rfg {

// A word over the free group on generators 1..g, letters are signed
// generator indices: +i is generator i, -i its inverse. The letter 0 is
// never valid. Parsing uses 'a'..'z' for generators and 'A'..'Z' for
// inverses, so "ABab" is the commutator [a,b].
using Word = std::vector<int>;

// Cancels adjacent inverse pairs until none remain.
Word reduce_word(const Word& w);
Word invert_word(const Word& w);
Word concat_words(const Word& a, const Word& b);
// u^-1 v^-1 u v, reduced.
Word commutator(const Word& u, const Word& v);
// Left-normed [[...[a1,a2],a3]...,an] over single letters; n >= 2.
Word iterated_commutator(const std::vector<int>& letters);

Word parse_word(const std::string& s);
std::string format_word(const Word& w);
// Largest generator index mentioned, 0 for the empty word.
int max_generator(const Word& w);

}  // namespace rfg

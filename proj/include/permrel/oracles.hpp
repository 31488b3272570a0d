#pragma once

// Brute-force reference computations. These deliberately avoid the
// rewriting engine, the union-find tables and the automata so they can be
// used to check them.

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "permrel/explorer.hpp"
#include "permrel/presentation.hpp"
#include "permrel/rewrite_cyclic.hpp"

namespace permrel::oracle {

/// All n^length words in lexicographic order.
std::vector<Word> all_words(int n, std::size_t length);

/// Uniform random word of the given length.
Word random_word(std::mt19937_64& rng, int n, std::size_t length);

/// Some rotation of a_1...a_n occurs in w as a factor (direct substring scan).
bool contains_rotation(const Word& w, int n);

/// Every (i, eps, j, tail) satisfying the normal-form conditions whose
/// concatenation is w, found by trying every split point.
std::vector<NormalForm> constrained_parses(const Word& w, int n);

/// The congruence class of w, by breadth-first search over single relation
/// moves in both orientations.
std::set<Word> class_by_search(const Presentation& p, const Word& w);

/// Subgroup generated by `generators`, by repeated pairwise products until
/// nothing new appears.
std::vector<Permutation> closure_by_products(int n, const std::vector<Permutation>& generators);

/// w in z S_n, decided on a table of length |w| by trying every cofactor s.
bool in_P_by_table(const CongruenceTable& table, const Word& w);

/// Applies `moves` random relation moves (either orientation) to w.
Word random_relation_walk(const Presentation& p, Word w, std::size_t moves, std::mt19937_64& rng);

}  // namespace permrel::oracle

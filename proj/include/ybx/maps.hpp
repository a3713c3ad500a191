#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ybx {

// Self-map of X = {0,...,n-1} as an image table.
using Map = std::vector<int>;
using Word = std::vector<int>;
// Subsets of X as bitmasks; n is capped at 20.
using Subset = std::uint32_t;

constexpr int kMaxGenerators = 20;

Map identity_map(int n);
// (f*g)(x) = f(g(x))
Map compose(const Map& f, const Map& g);
bool is_permutation(const Map& f);
bool is_identity(const Map& f);
Map inverse(const Map& f);
Map power(const Map& f, long long k);
int permutation_order(const Map& f);
// Least k >= 1 with f^(2k) = f^k.
int idempotent_index(const Map& f);
// Submonoid generated by gens (identity included), sorted.
std::vector<Map> monoid_closure(const std::vector<Map>& gens, int n, std::size_t limit);
Map apply(const Map& f, const Word& w);

std::string to_string(const Map& f);
std::string word_string(const Word& w);
Word parse_word(const std::string& s, int n);

int popcount(Subset s);
bool contains(Subset s, int x);
Subset full_set(int n);
std::vector<int> elements(Subset s);
Subset image(const Map& f, Subset s);
std::string subset_string(Subset s);

long long binomial(int n, int k);
long long lcm(long long a, long long b);

}  // namespace ybx

#pragma once

#include <array>
#include <string>
#include <vector>

#include "acsa/matrix.hpp"

namespace acsa
{

// The four index symbols 0, x, y, z.
enum class Idx : int
{
  zero = 0,
  x = 1,
  y = 2,
  z = 3
};

char idx_char(Idx n);
Idx idx_from_char(char c);

// hat(a, n) = 1 when n is 0 or a, and -1 otherwise. The character f_n
// evaluates on a generator g as hat(g, n).
int hat(Idx a, Idx n);

struct Character
{
  Idx n;
  // values on x, y, z
  std::array<int, 3> values;
};

Character character_eval(Idx n);

// perm[i] is the image of symbol i.
using Perm = std::array<Idx, 4>;

Perm identity_perm();
// Apply q first, then p.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// Cycle notation, e.g. "(0 x)(y z)"; the identity is "()".
Perm parse_perm(const std::string& s);
std::string perm_str(const Perm& p);
// All 24 permutations of the symbols.
std::vector<Perm> all_perms();

// Image of one generator under an automorphism: a generator and a sign.
struct SignedImage
{
  Idx target = Idx::x;
  int sign = 1;
};

struct Automorphism
{
  Perm perm;
  // images of x, y, z
  std::array<SignedImage, 3> images;
};

// The unique algebra automorphism acting on the h-elements by the given
// index permutation. The signed generator images come from factoring the
// permutation into a sign flip fixing one generator times a permutation of
// the generators.
Automorphism automorphism_from_perm(const Perm& p);

struct RelationReport
{
  bool ok = false;
  std::vector<Mat> residuals;
};

// Residuals of xy+yx-2z, yz+zy-2x, zx+xz-2y.
RelationReport check_relations_xyz(const Mat& x, const Mat& y, const Mat& z);
// Residuals of x^2y+2xyx+yx^2-4y and y^2x+2yxy+xy^2-4x.
RelationReport check_relations_xy(const Mat& x, const Mat& y);

// h_0 = x+y+z, h_x = x-y-z, h_y = -x+y-z, h_z = -x-y+z.
Mat h_element(Idx n, const Mat& x, const Mat& y, const Mat& z);

} // namespace acsa

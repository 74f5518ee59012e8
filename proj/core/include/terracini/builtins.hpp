#pragma once

#include <map>
#include <string>
#include <vector>

#include "terracini/variety.hpp"

namespace terracini {

/// Named variety registry.  Coordinate labels and column orders are fixed per
/// entry (documented in the README); counts such as ranks and numbers of
/// bases are invariant under column order.
///
///   veronese(n,d)               degree-d embedding of P^n (lex-sorted lattice
///                               points of the dilated simplex), labels z0..z{N-1}
///   cayley_menger(d,n)          squared-distance map of n points in R^d,
///                               labels z{i}{j} over edges of K_n
///   sym_rank_one(n)             rank-one symmetric n x n matrices, labels a{i}{j}
///   segre(m,n)                  rank-one m x n matrices, labels b{i}{j}
///   rational_normal_curve(deg)  monomial curve of degree deg, labels z1..z{deg+1}
///   coloop_extension[(seed)]    cylinder over a rational normal quartic in
///                               seeded generic coordinates, labels z1..z6
///   p1xp2_12                    (1,2) embedding of P^1 x P^2, column order as
///                               displayed in the source, labels z1..z12
///   p1xp1_23                    (2,3) embedding of P^1 x P^1 (lex-sorted grid),
///                               labels z1..z12
///   threefold_p                 8-point defective toric threefold, column
///                               order as displayed in the source, labels z1..z8
///   table1_x1 / _x2 / _x3       quadric Veronese of P^3 in monomial,
///                               Cayley-Menger and seeded generic coordinates
VarietySpec make_builtin(const std::string& name,
                         const std::map<std::string, long long>& params = {});

/// "name" or "name(a,b,...)" with positional parameters.
VarietySpec make_builtin_call(const std::string& call);

std::vector<std::string> builtin_names();

/// Seed pinned for table1_x3's generic linear change.
inline constexpr std::uint64_t kTable1ChangeSeed = 1;
/// Seed pinned for coloop_extension's generic change of the quartic curve.
inline constexpr std::uint64_t kColoopChangeSeed = 1;

}  // namespace terracini

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pencils/invariants.hpp"
#include "pencils/pencil.hpp"

namespace pencils {

// Irreducible component C_a^r of the pencils of normal rank <= r in m x n:
// closure of the orbit of the generic pencil K_a (a right singular indices
// summing to a, left summing to r - a, no elementary divisors).
struct ComponentId {
    int m = 0;
    int n = 0;
    int r = 0;
    int a = 0;

    bool valid() const;
    void require_valid() const; // PreconditionError naming the violated constraint
};

// Block list of the generic pencil: with n - r > 0 write a = alpha(n-r) + s,
// 0 <= s < n-r; the right part is s copies of L_{alpha+1} and n-r-s of
// L_alpha; dually on the left with r - a = beta(m-r) + t.
std::vector<CanonicalBlock> generic_blocks(const ComponentId& c);
Pencil generic_pencil(const ComponentId& c);

struct InclusionWitness {
    std::string condition;                  // "i", "ii" or "iii"
    int prefix = 0;                         // first failing prefix length
    std::optional<std::string> eigenvalue;  // class text, "inf", or "generic" (iii only)
};

struct InclusionVerdict {
    bool included = false;
    std::optional<InclusionWitness> witness; // present iff not included
};

// Does the orbit closure of P contain Q? Decided on invariants alone:
//   (i)  R(P) + nrank P  >=  R(Q) + nrank Q   (prefix-sum majorization)
//   (ii) L(P) + nrank P  >=  L(Q) + nrank Q
//   (iii) per eigenvalue class, Weyr(P) + r_0(P) <= Weyr(Q) + r_0(Q)
// Same sizes required.
InclusionVerdict closure_includes(const Pencil& p, const Pencil& q);
InclusionVerdict closure_includes(const KroneckerStructure& sp, const KroneckerStructure& sq);

// Q in C_a^r, i.e. Q in the orbit closure of the generic pencil.
bool component_member(const Pencil& q, const ComponentId& c);
bool component_member(const KroneckerStructure& sq, const ComponentId& c);

// All a with Q in C_a^r. Requires nrank(Q) <= r and r in range for (m,n).
std::vector<int> components_of(const Pencil& q, int r);

// dim C_a^r = r(2m + n - r) + a(n - m).
long long dimension(const ComponentId& c);

struct DimensionCheck {
    bool ok = false;
    long long expected = 0;
    long long max_rank = 0;
};

// Exact rank of the parametrization Jacobian at `trials` random rational
// points must reach the dimension formula (it can never exceed it).
DimensionCheck verify_dimension(const ComponentId& c, int trials, std::uint64_t seed);

// DOT digraph of the strict closure-inclusion order, transitively reduced.
std::string hasse_export(const std::vector<std::pair<std::string, Pencil>>& named);

} // namespace pencils

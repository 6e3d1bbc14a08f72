#pragma once

#include <cstdint>
#include <vector>

#include "pencils/errors.hpp"
#include "pencils/strata.hpp"

namespace pencils {

// One term u(lambda) v(lambda)^T with u = u0 + lambda u1 (length m) and
// v = v0 + lambda v1 (length n). Every term in a decomposition has u1 = 0 or
// v1 = 0, so the product has degree <= 1.
struct RankOneTerm {
    ScalarVec u0, u1, v0, v1;

    bool u_constant() const;
    bool v_constant() const;
};

bool operator==(const RankOneTerm& a, const RankOneTerm& b);

// Sum of r rank-one pencils: the first a terms have constant u, the remaining
// r - a constant v.
struct DegreePatternDecomposition {
    int a = 0;
    std::vector<RankOneTerm> terms;
};

// Lengths and the positional degree pattern; PreconditionError on violation.
void validate_decomposition(const DegreePatternDecomposition& d, int m, int n);

// k+1 terms summing to the right singular block of order k, the first j with
// constant u and the rest with constant v; 0 <= j <= k+1. Local coordinates:
// u has length k, v length k+1.
std::vector<RankOneTerm> decompose_Lk(int k, int j);

// Block decomposition with a prescribed number of leading constant-u terms:
// RightSingular(e) requires deg0_columns = e (e row terms), LeftSingular
// requires 0 (column terms), a Jordan block of order k admits any
// 0 <= deg0_columns <= k. Local coordinates.
std::vector<RankOneTerm> decompose_block(const CanonicalBlock& b, int deg0_columns);

// Membership failure reported by witness_decomposition, carrying the violated
// majorization condition.
struct MembershipError : PreconditionError {
    InclusionVerdict verdict;
    MembershipError(const std::string& msg, InclusionVerdict v)
        : PreconditionError(msg), verdict(std::move(v)) {}
};

// A decomposition of the pencil the canonical form denotes, witnessing
// membership in C_a^r. Membership itself is checked first and its failure
// throws MembershipError. Reconstruction is exact by construction (asserted).
DegreePatternDecomposition witness_decomposition(const CanonicalForm& cf, const ComponentId& c);

// Sum of the terms; validates lengths and the degree pattern.
Pencil reconstruct(const DegreePatternDecomposition& d, int m, int n);

struct SampleResult {
    Pencil pencil;
    DegreePatternDecomposition decomposition;
};

// Random point of C_a^r: parameter vectors drawn with integer entries uniform
// in [-height, height], assembled per the degree pattern.
SampleResult sample_component(const ComponentId& c, std::uint64_t seed, int height);

// Entrywise rational perturbation of the constant coefficient vectors u0, v0
// (|delta| <= eps/m resp. eps/n, so each vector moves by < eps in 2-norm),
// redrawn until both stacked coefficient matrices U0 (m x r) and V0 (n x r)
// have exact rank r. Requires r <= min(m,n). The perturbed pencil then has
// normal rank exactly r (asserted).
DegreePatternDecomposition perturb_to_full_rank(const DegreePatternDecomposition& d, int m, int n,
                                                const mpq_class& eps, std::uint64_t seed);

// Floating-point helpers for the perturbation distance bound
// |Q - Q_eps|_F <= r eps^2 + eps * alpha(Q).
double frobenius_distance(const Pencil& p, const Pencil& q);
double alpha_norm_sum(const DegreePatternDecomposition& d);

} // namespace pencils

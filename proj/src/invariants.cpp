#include "pencils/invariants.hpp"

#include <algorithm>
#include <map>

#include "pencils/errors.hpp"

namespace pencils {

int normal_rank(const Pencil& p) { return exact_rank(p.to_polymatrix()); }

namespace {

// Coefficient matrix of (A + lambda B) x(lambda) = 0 restricted to solutions of
// degree <= k: block rows A x_0; A x_i + B x_{i-1} (i = 1..k); B x_k.
Mat toeplitz_stage(const Pencil& p, int k) {
    Mat t((k + 2) * p.m, (k + 1) * p.n);
    for (int blk = 0; blk <= k; ++blk)
        for (int i = 0; i < p.m; ++i)
            for (int j = 0; j < p.n; ++j) {
                t.at(blk * p.m + i, blk * p.n + j) = p.A.at(i, j);
                t.at((blk + 1) * p.m + i, blk * p.n + j) = p.B.at(i, j);
            }
    return t;
}

std::vector<int> minimal_indices(const Pencil& p, int count) {
    std::vector<int> out;
    if (count == 0) return out;
    int d_prev = 0;       // d_{k-1}
    int count_prev = 0;   // #{indices <= k-1}
    for (int k = 0; k <= p.n; ++k) {
        const int d_k = (k + 1) * p.n - rank(toeplitz_stage(p, k));
        const int count_k = d_k - d_prev;
        check_internal(count_k >= count_prev && count_k <= count,
                       "minimal index counting sequence is not monotone");
        for (int c = count_prev; c < count_k; ++c) out.push_back(k);
        if (count_k == count) return out;
        d_prev = d_k;
        count_prev = count_k;
    }
    check_internal(false, "minimal index search exceeded the dimension cap");
    return out;
}

int root_multiplicity_at_zero(const Poly& p) {
    check_internal(!p.is_zero(), "zero invariant factor");
    int k = 0;
    while (p.coeff(k).is_zero()) ++k;
    return k;
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

} // namespace

std::vector<int> right_minimal_indices(const Pencil& p) {
    return minimal_indices(p, p.n - normal_rank(p));
}

std::vector<int> left_minimal_indices(const Pencil& p) {
    const Pencil t = transpose(p);
    return minimal_indices(t, t.n - normal_rank(t));
}

Eigenstructure eigenstructure(const Pencil& p) {
    Eigenstructure out;

    std::vector<Poly> factors = smith_form(p.to_polymatrix());
    std::vector<Poly> nonconstant;
    for (const Poly& d : factors)
        if (!d.is_constant()) nonconstant.push_back(d);
    for (const Poly& g : gcd_free_basis(nonconstant)) {
        FiniteClassDivisor fc;
        fc.cls = g;
        for (const Poly& d : nonconstant) {
            const int e = multiplicity(d, g);
            if (e > 0) fc.segre.push_back(e);
        }
        check_internal(!fc.segre.empty(), "gcd-free class divides no invariant factor");
        fc.segre = sorted_desc(fc.segre);
        out.finite.push_back(std::move(fc));
    }

    for (const Poly& d : smith_form(reversal(p).to_polymatrix())) {
        const int e = root_multiplicity_at_zero(d);
        if (e > 0) out.infinite.push_back(e);
    }
    out.infinite = sorted_desc(out.infinite);
    return out;
}

namespace {

int structure_block_size(const KroneckerStructure& s) {
    int size = 0;
    for (const FiniteClassDivisor& fc : s.finite) {
        int segre_sum = 0;
        for (int e : fc.segre) segre_sum += e;
        size += fc.cls.degree() * segre_sum;
    }
    for (int e : s.infinite) size += e;
    return size;
}

} // namespace

KroneckerStructure kronecker_structure(const Pencil& p) {
    KroneckerStructure s;
    s.m = p.m;
    s.n = p.n;
    s.nrank = normal_rank(p);
    s.right = minimal_indices(p, p.n - s.nrank);
    {
        const Pencil t = transpose(p);
        s.left = minimal_indices(t, t.n - s.nrank);
    }
    Eigenstructure eig = eigenstructure(p);
    s.finite = std::move(eig.finite);
    s.infinite = std::move(eig.infinite);

    int eps = 0, eta = 0;
    for (int e : s.right) eps += e;
    for (int e : s.left) eta += e;
    check_internal(s.nrank == eps + eta + structure_block_size(s),
                   "Kronecker structure size bookkeeping failed");
    return s;
}

KroneckerStructure structure_of_blocks(const std::vector<CanonicalBlock>& blocks) {
    require(!blocks.empty(), "empty block list has no structure");
    KroneckerStructure s;
    std::map<std::string, FiniteClassDivisor> finite; // keyed by class text for determinism
    for (const CanonicalBlock& b : blocks) {
        s.m += b.rows();
        s.n += b.cols();
        switch (b.kind) {
            case CanonicalBlock::Kind::RightSingular:
                s.right.push_back(b.order);
                s.nrank += b.order;
                break;
            case CanonicalBlock::Kind::LeftSingular:
                s.left.push_back(b.order);
                s.nrank += b.order;
                break;
            case CanonicalBlock::Kind::FiniteJordan: {
                const Poly cls = Poly{b.mu, Scalar(1)}; // det(J_k(mu) + lambda I) = (lambda + mu)^k
                auto [it, fresh] = finite.try_emplace(cls.str());
                if (fresh) it->second.cls = cls;
                it->second.segre.push_back(b.order);
                s.nrank += b.order;
                break;
            }
            case CanonicalBlock::Kind::InfiniteJordan:
                s.infinite.push_back(b.order);
                s.nrank += b.order;
                break;
        }
    }
    require(s.m >= 1 && s.n >= 1, "block list spans an empty pencil");
    std::sort(s.right.begin(), s.right.end());
    std::sort(s.left.begin(), s.left.end());
    for (auto& [key, fc] : finite) {
        fc.segre = sorted_desc(fc.segre);
        s.finite.push_back(std::move(fc));
    }
    std::sort(s.finite.begin(), s.finite.end(),
              [](const FiniteClassDivisor& x, const FiniteClassDivisor& y) {
                  return poly_order_less(x.cls, y.cls);
              });
    s.infinite = sorted_desc(s.infinite);
    return s;
}

std::vector<int> conjugate_partition(const std::vector<int>& parts) {
    int mx = 0;
    for (int p : parts) mx = std::max(mx, p);
    std::vector<int> w(static_cast<std::size_t>(mx));
    for (int j = 1; j <= mx; ++j)
        for (int p : parts)
            if (p >= j) ++w[static_cast<std::size_t>(j - 1)];
    return w;
}

namespace {

std::vector<int> index_count_list(const std::vector<int>& indices, int zero_count) {
    // (count of all, #{>=1}, #{>=2}, ...): position 0 is the number of blocks.
    int mx = 0;
    for (int e : indices) mx = std::max(mx, e);
    std::vector<int> out(static_cast<std::size_t>(mx) + 1);
    out[0] = zero_count;
    for (int i = 1; i <= mx; ++i)
        for (int e : indices)
            if (e >= i) ++out[static_cast<std::size_t>(i)];
    return out;
}

} // namespace

InvariantLists invariant_lists(const KroneckerStructure& s) {
    InvariantLists out;
    out.R = index_count_list(s.right, s.n - s.nrank);
    out.L = index_count_list(s.left, s.m - s.nrank);
    check_internal(out.R[0] == static_cast<int>(s.right.size()), "right index count mismatch");
    check_internal(out.L[0] == static_cast<int>(s.left.size()), "left index count mismatch");
    for (const FiniteClassDivisor& fc : s.finite)
        out.J.push_back(WeyrEntry{fc.cls, conjugate_partition(fc.segre)});
    if (!s.infinite.empty()) out.J.push_back(WeyrEntry{std::nullopt, conjugate_partition(s.infinite)});
    return out;
}

int epsilon_sum(const KroneckerStructure& s) {
    int e = 0;
    for (int x : s.right) e += x;
    return e;
}

int eta_sum(const KroneckerStructure& s) {
    int e = 0;
    for (int x : s.left) e += x;
    return e;
}

namespace {

// Segre data of structure s at every polynomial of `joint` (a refinement of
// s's own classes): the data of the unique class the element divides.
std::vector<std::vector<int>> segre_on_joint(const KroneckerStructure& s,
                                             const std::vector<Poly>& joint) {
    std::vector<std::vector<int>> out(joint.size());
    for (std::size_t k = 0; k < joint.size(); ++k) {
        for (const FiniteClassDivisor& fc : s.finite) {
            if (divmod(fc.cls, joint[k]).remainder.is_zero()) {
                out[k] = fc.segre;
                break;
            }
        }
    }
    return out;
}

std::vector<Poly> joint_class_basis(const KroneckerStructure& a, const KroneckerStructure& b) {
    std::vector<Poly> all;
    for (const FiniteClassDivisor& fc : a.finite) all.push_back(fc.cls);
    for (const FiniteClassDivisor& fc : b.finite) all.push_back(fc.cls);
    return gcd_free_basis(all);
}

} // namespace

bool equivalent_structures(const KroneckerStructure& a, const KroneckerStructure& b) {
    if (a.m != b.m || a.n != b.n || a.nrank != b.nrank) return false;
    if (a.right != b.right || a.left != b.left || a.infinite != b.infinite) return false;
    const std::vector<Poly> joint = joint_class_basis(a, b);
    return segre_on_joint(a, joint) == segre_on_joint(b, joint);
}

} // namespace pencils

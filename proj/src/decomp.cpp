#include "pencils/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pencils/errors.hpp"
#include "pencils/rng.hpp"

namespace pencils {

namespace {

bool all_zero(const ScalarVec& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

RankOneTerm local_term(int ulen, int vlen) {
    RankOneTerm t;
    t.u0.resize(static_cast<std::size_t>(ulen));
    t.u1.resize(static_cast<std::size_t>(ulen));
    t.v0.resize(static_cast<std::size_t>(vlen));
    t.v1.resize(static_cast<std::size_t>(vlen));
    return t;
}

} // namespace

bool RankOneTerm::u_constant() const { return all_zero(u1); }
bool RankOneTerm::v_constant() const { return all_zero(v1); }

bool operator==(const RankOneTerm& a, const RankOneTerm& b) {
    return a.u0 == b.u0 && a.u1 == b.u1 && a.v0 == b.v0 && a.v1 == b.v1;
}

void validate_decomposition(const DegreePatternDecomposition& d, int m, int n) {
    require(m >= 1 && n >= 1, "decomposition target sizes must be positive");
    require(d.a >= 0 && d.a <= static_cast<int>(d.terms.size()),
            "degree pattern split a out of range");
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const RankOneTerm& t = d.terms[i];
        require(t.u0.size() == static_cast<std::size_t>(m) && t.u1.size() == static_cast<std::size_t>(m),
                "term u vectors must have length m");
        require(t.v0.size() == static_cast<std::size_t>(n) && t.v1.size() == static_cast<std::size_t>(n),
                "term v vectors must have length n");
        if (i < static_cast<std::size_t>(d.a))
            require(t.u_constant(), "terms before the split must have constant u");
        else
            require(t.v_constant(), "terms after the split must have constant v");
    }
}

std::vector<RankOneTerm> decompose_Lk(int k, int j) {
    require(k >= 0, "block order must be >= 0");
    require(j >= 0 && j <= k + 1, "constant-u term count out of range [0, k+1]");
    std::vector<RankOneTerm> out;

    auto row_term = [&](int i) { // lambda e_i + e_{i+1} in the v slot
        RankOneTerm t = local_term(k, k + 1);
        t.u0[i] = Scalar(1);
        t.v0[i + 1] = Scalar(1);
        t.v1[i] = Scalar(1);
        return t;
    };
    auto col_term = [&](int c) { // column c of the block in the u slot
        RankOneTerm t = local_term(k, k + 1);
        if (c >= 1) t.u0[c - 1] = Scalar(1);
        if (c <= k - 1) t.u1[c] = Scalar(1);
        t.v0[c] = Scalar(1);
        return t;
    };

    if (j == 0) {
        for (int c = 0; c <= k; ++c) out.push_back(col_term(c));
    } else if (j == k + 1) {
        for (int i = 0; i < k; ++i) out.push_back(row_term(i));
        out.push_back(local_term(k, k + 1)); // zero term pads the count to k+1
    } else if (j == k) {
        for (int i = 0; i + 1 < k; ++i) out.push_back(row_term(i));
        RankOneTerm split = local_term(k, k + 1);
        split.u0[k - 1] = Scalar(1);
        split.v0[k] = Scalar(1);
        out.push_back(split);
        RankOneTerm rest = local_term(k, k + 1);
        rest.u1[k - 1] = Scalar(1);
        rest.v0[k - 1] = Scalar(1);
        out.push_back(rest);
    } else {
        for (int i = 0; i < j; ++i) out.push_back(row_term(i));
        RankOneTerm mid = local_term(k, k + 1);
        mid.u1[j] = Scalar(1);
        mid.v0[j] = Scalar(1);
        out.push_back(mid);
        for (int c = j + 1; c <= k; ++c) out.push_back(col_term(c));
    }

    check_internal(static_cast<int>(out.size()) == k + 1, "L_k decomposition term count");
    for (int i = 0; i < k + 1; ++i)
        check_internal(i < j ? out[static_cast<std::size_t>(i)].u_constant()
                             : out[static_cast<std::size_t>(i)].v_constant(),
                       "L_k decomposition degree pattern");
    return out;
}

std::vector<RankOneTerm> decompose_block(const CanonicalBlock& b, int deg0_columns) {
    std::vector<RankOneTerm> out;
    const int k = b.order;
    switch (b.kind) {
        case CanonicalBlock::Kind::RightSingular: {
            require(deg0_columns == k, "a right singular block yields exactly order constant-u terms");
            for (int i = 0; i < k; ++i) {
                RankOneTerm t = local_term(k, k + 1);
                t.u0[i] = Scalar(1);
                t.v0[i + 1] = Scalar(1);
                t.v1[i] = Scalar(1);
                out.push_back(std::move(t));
            }
            break;
        }
        case CanonicalBlock::Kind::LeftSingular: {
            require(deg0_columns == 0, "a left singular block yields only constant-v terms");
            for (int c = 0; c < k; ++c) {
                RankOneTerm t = local_term(k + 1, k);
                t.u0[c + 1] = Scalar(1);
                t.u1[c] = Scalar(1);
                t.v0[c] = Scalar(1);
                out.push_back(std::move(t));
            }
            break;
        }
        case CanonicalBlock::Kind::FiniteJordan: {
            require(deg0_columns >= 0 && deg0_columns <= k,
                    "Jordan block constant-u term count out of range [0, order]");
            const int d = deg0_columns;
            for (int i = 0; i < d; ++i) { // row i: (mu+lambda) e_i + e_{i+1}
                RankOneTerm t = local_term(k, k);
                t.u0[i] = Scalar(1);
                t.v0[i] = b.mu;
                if (i + 1 < k) t.v0[i + 1] = Scalar(1);
                t.v1[i] = Scalar(1);
                out.push_back(std::move(t));
            }
            if (d < k) {
                RankOneTerm mid = local_term(k, k); // (mu+lambda) e_d e_d^T
                mid.u0[d] = b.mu;
                mid.u1[d] = Scalar(1);
                mid.v0[d] = Scalar(1);
                out.push_back(std::move(mid));
                for (int c = d + 1; c < k; ++c) { // column c: e_{c-1} + (mu+lambda) e_c
                    RankOneTerm t = local_term(k, k);
                    t.u0[c - 1] = Scalar(1);
                    t.u0[c] = b.mu;
                    t.u1[c] = Scalar(1);
                    t.v0[c] = Scalar(1);
                    out.push_back(std::move(t));
                }
            }
            break;
        }
        case CanonicalBlock::Kind::InfiniteJordan: {
            require(deg0_columns >= 0 && deg0_columns <= k,
                    "Jordan block constant-u term count out of range [0, order]");
            const int d = deg0_columns;
            for (int i = 0; i < d; ++i) { // row i: e_i + lambda e_{i+1}
                RankOneTerm t = local_term(k, k);
                t.u0[i] = Scalar(1);
                t.v0[i] = Scalar(1);
                if (i + 1 < k) t.v1[i + 1] = Scalar(1);
                out.push_back(std::move(t));
            }
            if (d < k) {
                RankOneTerm mid = local_term(k, k); // e_d e_d^T
                mid.u0[d] = Scalar(1);
                mid.v0[d] = Scalar(1);
                out.push_back(std::move(mid));
                for (int c = d + 1; c < k; ++c) { // column c: lambda e_{c-1} + e_c
                    RankOneTerm t = local_term(k, k);
                    t.u0[c] = Scalar(1);
                    t.u1[c - 1] = Scalar(1);
                    t.v0[c] = Scalar(1);
                    out.push_back(std::move(t));
                }
            }
            break;
        }
    }
    return out;
}

namespace {

struct LayoutBlock {
    CanonicalBlock block;
    bool flipped = false; // Jordan blocks in the transposed branch
    int row_off = 0;
    int col_off = 0;

    int rows() const { return flipped ? block.cols() : block.rows(); }
    int cols() const { return flipped ? block.rows() : block.cols(); }
    bool is_right() const { return block.kind == CanonicalBlock::Kind::RightSingular; }
    bool is_left() const { return block.kind == CanonicalBlock::Kind::LeftSingular; }
    bool is_jordan() const {
        return block.kind == CanonicalBlock::Kind::FiniteJordan ||
               block.kind == CanonicalBlock::Kind::InfiniteJordan;
    }
};

std::vector<LayoutBlock> make_layout(const std::vector<CanonicalBlock>& blocks) {
    std::vector<LayoutBlock> out;
    int ro = 0, co = 0;
    for (const CanonicalBlock& b : blocks) {
        LayoutBlock lb;
        lb.block = b;
        lb.row_off = ro;
        lb.col_off = co;
        out.push_back(lb);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

RankOneTerm swap_uv(const RankOneTerm& t) {
    RankOneTerm s;
    s.u0 = t.v0;
    s.u1 = t.v1;
    s.v0 = t.u0;
    s.v1 = t.u1;
    return s;
}

// Local terms of the (possibly flipped) block split into the constant-u group
// and the constant-v group, with d terms in the former.
std::pair<std::vector<RankOneTerm>, std::vector<RankOneTerm>> local_split(const LayoutBlock& lb,
                                                                          int d) {
    std::pair<std::vector<RankOneTerm>, std::vector<RankOneTerm>> out;
    if (!lb.flipped) {
        std::vector<RankOneTerm> terms = decompose_block(lb.block, d);
        out.first.assign(terms.begin(), terms.begin() + d);
        out.second.assign(terms.begin() + d, terms.end());
        return out;
    }
    // A flipped Jordan block: decompose the original with the complementary
    // split, then swap u and v in every term.
    check_internal(lb.is_jordan(), "only Jordan blocks carry the flipped flag");
    const int k = lb.block.order;
    std::vector<RankOneTerm> terms = decompose_block(lb.block, k - d);
    for (auto it = terms.begin() + (k - d); it != terms.end(); ++it) out.first.push_back(swap_uv(*it));
    for (auto it = terms.begin(); it != terms.begin() + (k - d); ++it) out.second.push_back(swap_uv(*it));
    return out;
}

RankOneTerm embed(const RankOneTerm& local, const LayoutBlock& lb, int m, int n) {
    RankOneTerm t = local_term(m, n);
    for (std::size_t i = 0; i < local.u0.size(); ++i) {
        t.u0[static_cast<std::size_t>(lb.row_off) + i] = local.u0[i];
        t.u1[static_cast<std::size_t>(lb.row_off) + i] = local.u1[i];
    }
    for (std::size_t i = 0; i < local.v0.size(); ++i) {
        t.v0[static_cast<std::size_t>(lb.col_off) + i] = local.v0[i];
        t.v1[static_cast<std::size_t>(lb.col_off) + i] = local.v1[i];
    }
    return t;
}

struct TermGroups {
    std::vector<RankOneTerm> u_group;
    std::vector<RankOneTerm> v_group;
};

TermGroups assemble_terms(const std::vector<LayoutBlock>& layout, int m, int n, int r, int a) {
    TermGroups out;
    int eps = 0, eta = 0, jsize = 0;
    for (const LayoutBlock& lb : layout) {
        if (lb.is_right()) eps += lb.block.order;
        else if (lb.is_left()) eta += lb.block.order;
        else jsize += lb.block.order;
    }
    const int ntilde = eps + eta + jsize;
    check_internal(ntilde <= r, "decomposing a pencil of normal rank above r");

    if (eps > a) {
        // More right singular structure than constant-u slots: decompose the
        // n - r smallest right blocks into rows (t <= a of them), spend the
        // remaining a - t constant-u slots inside the r - ntilde largest right
        // blocks via the padded L_k split, everything else into constant-v terms.
        check_internal(ntilde < r, "eps > a forces slack in the rank budget");
        std::vector<const LayoutBlock*> rights;
        for (const LayoutBlock& lb : layout)
            if (lb.is_right()) rights.push_back(&lb);
        std::stable_sort(rights.begin(), rights.end(),
                         [](const LayoutBlock* x, const LayoutBlock* y) {
                             return x->block.order < y->block.order;
                         });
        const int nsel = r - ntilde;
        check_internal(static_cast<int>(rights.size()) >= nsel, "not enough right blocks to pad");
        const std::size_t split = rights.size() - static_cast<std::size_t>(nsel);

        int t = 0;
        for (std::size_t i = 0; i < split; ++i) t += rights[i]->block.order;
        check_internal(t <= a, "row/column budget bound violated in the padded branch");

        for (std::size_t i = 0; i < split; ++i) {
            const LayoutBlock& lb = *rights[i];
            for (const RankOneTerm& lt : decompose_block(lb.block, lb.block.order))
                out.u_group.push_back(embed(lt, lb, m, n));
        }
        int need = a - t;
        for (std::size_t i = split; i < rights.size(); ++i) {
            const LayoutBlock& lb = *rights[i];
            const int jb = std::min(lb.block.order + 1, need);
            need -= jb;
            std::vector<RankOneTerm> lk = decompose_Lk(lb.block.order, jb);
            for (int q = 0; q < static_cast<int>(lk.size()); ++q) {
                RankOneTerm g = embed(lk[static_cast<std::size_t>(q)], lb, m, n);
                (q < jb ? out.u_group : out.v_group).push_back(std::move(g));
            }
        }
        check_internal(need == 0, "constant-u slots left unfilled in the padded branch");
        for (const LayoutBlock& lb : layout) {
            if (lb.is_left()) {
                for (const RankOneTerm& lt : decompose_block(lb.block, 0))
                    out.v_group.push_back(embed(lt, lb, m, n));
            } else if (lb.is_jordan()) {
                auto [ug, vg] = local_split(lb, 0);
                check_internal(ug.empty(), "Jordan split with zero constant-u terms");
                for (const RankOneTerm& lt : vg) out.v_group.push_back(embed(lt, lb, m, n));
            }
        }
    } else if (eta <= r - a) {
        // Right blocks into rows, spare constant-u slots spent inside Jordan
        // blocks, left blocks into columns, rank slack padded with zero terms.
        for (const LayoutBlock& lb : layout)
            if (lb.is_right())
                for (const RankOneTerm& lt : decompose_block(lb.block, lb.block.order))
                    out.u_group.push_back(embed(lt, lb, m, n));
        int need_u = a - eps;
        for (const LayoutBlock& lb : layout) {
            if (!lb.is_jordan()) continue;
            const int db = std::min(lb.block.order, need_u);
            need_u -= db;
            auto [ug, vg] = local_split(lb, db);
            for (const RankOneTerm& lt : ug) out.u_group.push_back(embed(lt, lb, m, n));
            for (const RankOneTerm& lt : vg) out.v_group.push_back(embed(lt, lb, m, n));
        }
        for (const LayoutBlock& lb : layout)
            if (lb.is_left())
                for (const RankOneTerm& lt : decompose_block(lb.block, 0))
                    out.v_group.push_back(embed(lt, lb, m, n));
        const int pad = r - ntilde;
        check_internal(need_u <= pad, "constant-u slots exceed the rank slack");
        for (int q = 0; q < pad; ++q) {
            RankOneTerm zero = local_term(m, n);
            zero.v0[0] = Scalar(1); // rank-0 term: u stays zero
            (q < need_u ? out.u_group : out.v_group).push_back(std::move(zero));
        }
    } else {
        // eta > r - a (and then necessarily eps < a): transpose the layout,
        // decompose for the dual split r - a, and swap u with v in the result.
        check_internal(eps < a, "eps = a forces eta <= r - a");
        std::vector<LayoutBlock> flipped;
        for (const LayoutBlock& lb : layout) {
            LayoutBlock fb = lb;
            fb.row_off = lb.col_off;
            fb.col_off = lb.row_off;
            if (lb.is_right()) fb.block = CanonicalBlock::left(lb.block.order);
            else if (lb.is_left()) fb.block = CanonicalBlock::right(lb.block.order);
            else fb.flipped = !lb.flipped;
            flipped.push_back(fb);
        }
        TermGroups dual = assemble_terms(flipped, n, m, r, r - a);
        for (const RankOneTerm& t : dual.v_group) out.u_group.push_back(swap_uv(t));
        for (const RankOneTerm& t : dual.u_group) out.v_group.push_back(swap_uv(t));
    }

    check_internal(static_cast<int>(out.u_group.size()) == a &&
                       static_cast<int>(out.v_group.size()) == r - a,
                   "assembled term group sizes");
    return out;
}

ScalarVec mat_vec(const Mat& m, const ScalarVec& v) {
    ScalarVec out(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Scalar acc;
        for (int j = 0; j < m.cols; ++j) acc = acc + m.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

} // namespace

DegreePatternDecomposition witness_decomposition(const CanonicalForm& cf, const ComponentId& c) {
    c.require_valid();
    const Pencil target = realize(cf); // validates blocks, sizes, E, F
    require(target.m == c.m && target.n == c.n, "canonical form size differs from component size");

    const InclusionVerdict verdict =
        closure_includes(structure_of_blocks(generic_blocks(c)), structure_of_blocks(cf.blocks));
    if (!verdict.included)
        throw MembershipError("pencil is not in the requested component", verdict);

    TermGroups groups = assemble_terms(make_layout(cf.blocks), c.m, c.n, c.r, c.a);

    DegreePatternDecomposition out;
    out.a = c.a;
    for (auto& t : groups.u_group) out.terms.push_back(std::move(t));
    for (auto& t : groups.v_group) out.terms.push_back(std::move(t));

    if (cf.E) {
        for (RankOneTerm& t : out.terms) {
            t.u0 = mat_vec(*cf.E, t.u0);
            t.u1 = mat_vec(*cf.E, t.u1);
        }
    }
    if (cf.F) {
        const Mat ft = cf.F->transpose();
        for (RankOneTerm& t : out.terms) {
            t.v0 = mat_vec(ft, t.v0);
            t.v1 = mat_vec(ft, t.v1);
        }
    }

    validate_decomposition(out, c.m, c.n);
    check_internal(reconstruct(out, c.m, c.n) == target, "witness decomposition reconstruction");
    return out;
}

Pencil reconstruct(const DegreePatternDecomposition& d, int m, int n) {
    validate_decomposition(d, m, n);
    Mat A(m, n), B(m, n);
    for (const RankOneTerm& t : d.terms) {
        A = A + outer(t.u0, t.v0);
        B = B + outer(t.u0, t.v1) + outer(t.u1, t.v0);
        // u1 v1^T would be the lambda^2 coefficient; the pattern keeps it zero.
    }
    return Pencil(std::move(A), std::move(B));
}

SampleResult sample_component(const ComponentId& c, std::uint64_t seed, int height) {
    c.require_valid();
    require(height >= 1, "sampling height must be >= 1");
    Rng rng(seed);
    auto draw_vec = [&](int len) {
        ScalarVec v(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) v[static_cast<std::size_t>(k)] = Scalar(rng.uniform(-height, height));
        return v;
    };

    DegreePatternDecomposition d;
    d.a = c.a;
    d.terms.resize(static_cast<std::size_t>(c.r));
    for (auto& t : d.terms) t = RankOneTerm{ScalarVec(static_cast<std::size_t>(c.m)),
                                            ScalarVec(static_cast<std::size_t>(c.m)),
                                            ScalarVec(static_cast<std::size_t>(c.n)),
                                            ScalarVec(static_cast<std::size_t>(c.n))};
    // Parameter draw order mirrors the parametrization: all u0, then u1 for
    // the constant-v terms, then all v0, then v1 for the constant-u terms.
    for (int i = 0; i < c.r; ++i) d.terms[static_cast<std::size_t>(i)].u0 = draw_vec(c.m);
    for (int i = c.a; i < c.r; ++i) d.terms[static_cast<std::size_t>(i)].u1 = draw_vec(c.m);
    for (int i = 0; i < c.r; ++i) d.terms[static_cast<std::size_t>(i)].v0 = draw_vec(c.n);
    for (int i = 0; i < c.a; ++i) d.terms[static_cast<std::size_t>(i)].v1 = draw_vec(c.n);

    SampleResult out{reconstruct(d, c.m, c.n), std::move(d)};
    return out;
}

DegreePatternDecomposition perturb_to_full_rank(const DegreePatternDecomposition& d, int m, int n,
                                                const mpq_class& eps, std::uint64_t seed) {
    validate_decomposition(d, m, n);
    const int r = static_cast<int>(d.terms.size());
    require(r >= 1, "empty decomposition cannot be perturbed to positive rank");
    require(r <= std::min(m, n), "rank r cannot exceed min(m, n)");
    require(eps > 0, "perturbation size must be positive");

    Rng rng(seed);
    const int grid = 16;
    auto nudge = [&](ScalarVec& v, const mpq_class& step) {
        for (Scalar& s : v) {
            const int k = rng.uniform(-grid, grid);
            s.re += step * k / grid;
        }
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        DegreePatternDecomposition out = d;
        for (RankOneTerm& t : out.terms) {
            nudge(t.u0, eps / m);
            nudge(t.v0, eps / n);
        }
        Mat U0(m, r), V0(n, r);
        for (int i = 0; i < r; ++i) {
            for (int k = 0; k < m; ++k) U0.at(k, i) = out.terms[static_cast<std::size_t>(i)].u0[static_cast<std::size_t>(k)];
            for (int k = 0; k < n; ++k) V0.at(k, i) = out.terms[static_cast<std::size_t>(i)].v0[static_cast<std::size_t>(k)];
        }
        if (rank(U0) != r || rank(V0) != r) continue;
        check_internal(normal_rank(reconstruct(out, m, n)) == r,
                       "full-rank coefficients must give normal rank r");
        return out;
    }
    throw std::runtime_error("perturbation failed to reach full rank after 64 attempts");
}

namespace {

double vec_norm(const ScalarVec& v) {
    double s = 0;
    for (const Scalar& x : v) {
        const double re = x.re_double(), im = x.im_double();
        s += re * re + im * im;
    }
    return std::sqrt(s);
}

} // namespace

double frobenius_distance(const Pencil& p, const Pencil& q) {
    check_internal(p.m == q.m && p.n == q.n, "distance of pencils with different sizes");
    double s = 0;
    for (std::size_t k = 0; k < p.A.e.size(); ++k) {
        const Scalar da = p.A.e[k] - q.A.e[k];
        const Scalar db = p.B.e[k] - q.B.e[k];
        const double ar = da.re_double(), ai = da.im_double();
        const double br = db.re_double(), bi = db.im_double();
        s += ar * ar + ai * ai + br * br + bi * bi;
    }
    return std::sqrt(s);
}

double alpha_norm_sum(const DegreePatternDecomposition& d) {
    double s = 0;
    for (std::size_t i = 0; i < d.terms.size(); ++i) {
        const RankOneTerm& t = d.terms[i];
        s += vec_norm(t.u0) + vec_norm(t.v0);
        s += i < static_cast<std::size_t>(d.a) ? vec_norm(t.v1) : vec_norm(t.u1);
    }
    return s;
}

} // namespace pencils

#include "pencils/pencil.hpp"

#include <algorithm>
#include <tuple>

#include "pencils/errors.hpp"

namespace pencils {

Pencil::Pencil(Mat a, Mat b) : m(a.rows), n(a.cols), A(std::move(a)), B(std::move(b)) {
    require(m >= 1 && n >= 1, "pencil must have positive dimensions");
    require(A.rows == B.rows && A.cols == B.cols, "pencil coefficient shapes differ");
}

Poly Pencil::entry(int i, int j) const { return Poly{A.at(i, j), B.at(i, j)}; }

PolyMatrix Pencil::to_polymatrix() const {
    PolyMatrix p(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) p.at(i, j) = entry(i, j);
    return p;
}

bool operator==(const Pencil& a, const Pencil& b) { return a.A == b.A && a.B == b.B; }
bool operator!=(const Pencil& a, const Pencil& b) { return !(a == b); }

CanonicalBlock CanonicalBlock::right(int eps) {
    require(eps >= 0, "right singular block order must be >= 0");
    CanonicalBlock b;
    b.kind = Kind::RightSingular;
    b.order = eps;
    return b;
}

CanonicalBlock CanonicalBlock::left(int eta) {
    require(eta >= 0, "left singular block order must be >= 0");
    CanonicalBlock b;
    b.kind = Kind::LeftSingular;
    b.order = eta;
    return b;
}

CanonicalBlock CanonicalBlock::finite(int k, Scalar mu) {
    require(k >= 1, "finite Jordan block order must be >= 1");
    CanonicalBlock b;
    b.kind = Kind::FiniteJordan;
    b.order = k;
    b.mu = std::move(mu);
    return b;
}

CanonicalBlock CanonicalBlock::infinite(int u) {
    require(u >= 1, "infinite Jordan block order must be >= 1");
    CanonicalBlock b;
    b.kind = Kind::InfiniteJordan;
    b.order = u;
    return b;
}

int CanonicalBlock::rows() const {
    switch (kind) {
        case Kind::RightSingular: return order;
        case Kind::LeftSingular: return order + 1;
        default: return order;
    }
}

int CanonicalBlock::cols() const {
    switch (kind) {
        case Kind::RightSingular: return order + 1;
        case Kind::LeftSingular: return order;
        default: return order;
    }
}

bool operator==(const CanonicalBlock& a, const CanonicalBlock& b) {
    return a.kind == b.kind && a.order == b.order && a.mu == b.mu;
}

Pencil block_pencil(const CanonicalBlock& b) {
    require(b.rows() >= 1 && b.cols() >= 1,
            "order-0 singular block has an empty dimension and is not a pencil by itself");
    Mat A(b.rows(), b.cols());
    Mat B(b.rows(), b.cols());
    switch (b.kind) {
        case CanonicalBlock::Kind::RightSingular:
            for (int i = 0; i < b.order; ++i) {
                B.at(i, i) = Scalar(1);
                A.at(i, i + 1) = Scalar(1);
            }
            break;
        case CanonicalBlock::Kind::LeftSingular:
            for (int i = 0; i < b.order; ++i) {
                B.at(i, i) = Scalar(1);
                A.at(i + 1, i) = Scalar(1);
            }
            break;
        case CanonicalBlock::Kind::FiniteJordan:
            for (int i = 0; i < b.order; ++i) {
                A.at(i, i) = b.mu;
                B.at(i, i) = Scalar(1);
                if (i + 1 < b.order) A.at(i, i + 1) = Scalar(1);
            }
            break;
        case CanonicalBlock::Kind::InfiniteJordan:
            for (int i = 0; i < b.order; ++i) {
                A.at(i, i) = Scalar(1);
                if (i + 1 < b.order) B.at(i, i + 1) = Scalar(1);
            }
            break;
    }
    return Pencil(std::move(A), std::move(B));
}

Pencil direct_sum(const std::vector<Pencil>& ps) {
    require(!ps.empty(), "direct sum of an empty list");
    int m = 0, n = 0;
    for (const Pencil& p : ps) {
        m += p.m;
        n += p.n;
    }
    Mat A(m, n), B(m, n);
    int ro = 0, co = 0;
    for (const Pencil& p : ps) {
        for (int i = 0; i < p.m; ++i)
            for (int j = 0; j < p.n; ++j) {
                A.at(ro + i, co + j) = p.A.at(i, j);
                B.at(ro + i, co + j) = p.B.at(i, j);
            }
        ro += p.m;
        co += p.n;
    }
    return Pencil(std::move(A), std::move(B));
}

Pencil direct_sum_blocks(const std::vector<CanonicalBlock>& blocks) {
    require(!blocks.empty(), "direct sum of an empty block list");
    int m = 0, n = 0;
    for (const CanonicalBlock& b : blocks) {
        m += b.rows();
        n += b.cols();
    }
    require(m >= 1 && n >= 1, "block list spans an empty pencil");
    Mat A(m, n), B(m, n);
    int ro = 0, co = 0;
    for (const CanonicalBlock& b : blocks) {
        if (b.rows() > 0 && b.cols() > 0) {
            const Pencil p = block_pencil(b);
            for (int i = 0; i < p.m; ++i)
                for (int j = 0; j < p.n; ++j) {
                    A.at(ro + i, co + j) = p.A.at(i, j);
                    B.at(ro + i, co + j) = p.B.at(i, j);
                }
        }
        ro += b.rows();
        co += b.cols();
    }
    return Pencil(std::move(A), std::move(B));
}

Pencil realize(const CanonicalForm& cf) {
    Pencil p = direct_sum_blocks(cf.blocks);
    const Mat E = cf.E ? *cf.E : Mat::identity(p.m);
    const Mat F = cf.F ? *cf.F : Mat::identity(p.n);
    return apply_equivalence(E, p, F);
}

Pencil apply_equivalence(const Mat& E, const Pencil& p, const Mat& F) {
    require(E.rows == p.m && E.cols == p.m, "left factor shape must match row count");
    require(F.rows == p.n && F.cols == p.n, "right factor shape must match column count");
    require(invertible(E), "left equivalence factor is singular");
    require(invertible(F), "right equivalence factor is singular");
    return Pencil(E * p.A * F, E * p.B * F);
}

Pencil transpose(const Pencil& p) { return Pencil(p.A.transpose(), p.B.transpose()); }

Pencil reversal(const Pencil& p) { return Pencil(p.B, p.A); }

bool same_block_multiset(const std::vector<CanonicalBlock>& a, const std::vector<CanonicalBlock>& b) {
    if (a.size() != b.size()) return false;
    auto key = [](const CanonicalBlock& x) {
        return std::tuple<int, int, std::string>(static_cast<int>(x.kind), x.order, x.mu.str());
    };
    std::vector<std::tuple<int, int, std::string>> ka, kb;
    for (const auto& x : a) ka.push_back(key(x));
    for (const auto& x : b) kb.push_back(key(x));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

} // namespace pencils

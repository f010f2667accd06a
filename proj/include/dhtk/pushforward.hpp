#pragma once

// Exact Duistermaat-Heckman densities of toric models under rank-1 integer
// projections. The density of <w,.> over a simplex is assembled from
// confluent divided differences of truncated powers: with vertex images
// t_0 <= ... <= t_n, the image density of Lebesgue measure on S is
//
//     n * vol(S) * [t_0,...,t_n] (s -> (s - t)_+^{n-1}),
//
// a degree-(n-1) spline supported on [t_0, t_n]. Repeated vertex images are
// handled confluently (derivative entries in the difference table). Summing
// over a triangulation gives the density of the whole polytope; the total
// mass is vol(polytope) exactly.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "piecewise.hpp"
#include "polytope.hpp"
#include "sign_check.hpp"

namespace dhtk {

struct ToricModel {
    VRep polytope;
    std::vector<IntVec> projection;  // k x n integer matrix, rows independent

    int ambient_dim() const { return polytope.dim(); }
    int rank() const { return static_cast<int>(projection.size()); }

    void validate() const {
        if (projection.empty())
            throw std::invalid_argument("ToricModel: empty projection");
        for (const auto& row : projection)
            if (static_cast<int>(row.size()) != polytope.dim())
                throw std::invalid_argument("ToricModel: projection width != polytope dimension");
        RatMat m;
        for (const auto& row : projection) {
            RatVec r(row.size());
            for (size_t j = 0; j < row.size(); ++j)
                r[j] = Rational(row[j]);
            m.push_back(std::move(r));
        }
        if (linalg::rank(std::move(m)) != projection.size())
            throw std::invalid_argument("ToricModel: projection rows are dependent");
        if (rank() > ambient_dim())
            throw std::invalid_argument("ToricModel: rank exceeds dimension");
    }
};

// Piecewise density with wall metadata. n is the polytope dimension, k the
// projection rank; chamber polynomials have degree <= n-k.
struct DHFunction {
    PiecewisePoly density;
    std::vector<Rational> walls;  // interior breakpoints
    int n = 0;
    int k = 1;
};

// One critical level of the circle direction: isotropy weights of the
// fixed component plus its reduced volume (1 for isolated fixed points).
struct FixedComponent {
    Rational level;
    std::vector<Rational> weights;
    Rational reduced_volume = Rational(1);
};

// Non-generic projection: some polytope edge is orthogonal to w.
struct GenericityError : std::invalid_argument {
    explicit GenericityError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

// (s - t)^p as a polynomial in t.
inline UniPoly power_of_difference(const Rational& s, int p) {
    UniPoly base(std::vector<Rational>{s, Rational(-1)});
    UniPoly out = UniPoly::constant(Rational(1));
    for (int i = 0; i < p; ++i)
        out = out * base;
    return out;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n)
        return Rational(0);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return Rational(num, den);
}

}  // namespace detail

// Exact density of the image of Lebesgue measure on S under x -> <w,x>.
inline PiecewisePoly simplex_pushforward(const Simplex& s, const IntVec& w) {
    bool nonzero = false;
    for (const auto& c : w)
        nonzero = nonzero || c != 0;
    if (!nonzero)
        throw std::invalid_argument("simplex_pushforward: zero projection");
    const int n = s.dim;
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("simplex_pushforward: direction dimension mismatch");

    std::vector<Rational> knots;
    knots.reserve(s.verts.size());
    for (const auto& v : s.verts)
        knots.push_back(dot(w, v));
    std::sort(knots.begin(), knots.end());
    std::vector<Rational> distinct(knots);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2)
        throw std::invalid_argument("simplex_pushforward: projection is constant on the simplex");

    const Rational scale = Rational(n) * s.volume();
    std::vector<UniPoly> pieces;
    for (size_t gap = 0; gap + 1 < distinct.size(); ++gap) {
        const Rational& right = distinct[gap + 1];
        // Confluent divided-difference table of s -> (s - t)_+^{n-1} over the
        // knots, with t a formal parameter inside the current gap: knots to
        // the right of the gap contribute (s - t)^{n-1}, the others zero.
        // dd[i][j] holds [u_i,...,u_j] as a polynomial in t.
        const size_t m = knots.size();
        std::vector<std::vector<UniPoly>> dd(m, std::vector<UniPoly>(m));
        for (size_t i = 0; i < m; ++i) {
            if (knots[i] >= right)
                dd[i][i] = detail::power_of_difference(knots[i], n - 1);
        }
        for (size_t len = 1; len < m; ++len) {
            for (size_t i = 0; i + len < m; ++i) {
                size_t j = i + len;
                if (knots[i] == knots[j]) {
                    // Repeated knot: [u,...,u] = F^{(j-i)}(u)/(j-i)!.
                    if (knots[i] >= right) {
                        int d = static_cast<int>(len);
                        dd[i][j] = detail::binomial(n - 1, d) *
                                   detail::power_of_difference(knots[i], n - 1 - d);
                    }
                } else {
                    UniPoly num = dd[i + 1][j] - dd[i][j - 1];
                    dd[i][j] = num * (knots[j] - knots[i]).reciprocal();
                }
            }
        }
        pieces.push_back(scale * dd[0][m - 1]);
    }
    return PiecewisePoly(std::move(distinct), std::move(pieces));
}

// Exact DH density of a rank-1 toric model: sum of simplex push-forwards
// over the placing triangulation, canonicalized. k >= 2 has no exact path
// here; use dh_mc_oracle.
inline DHFunction dh_compute(const ToricModel& model) {
    model.validate();
    if (model.rank() != 1)
        throw std::invalid_argument(
            "dh_compute: exact densities need projection rank k = 1; use dh_mc_oracle for k >= 2");
    const IntVec& w = model.projection.front();
    PiecewisePoly density;
    for (const auto& cell : triangulate(model.polytope))
        density = density + simplex_pushforward(cell, w);

    DHFunction f;
    f.density = std::move(density);
    f.n = model.ambient_dim();
    f.k = 1;
    const auto& bks = f.density.breakpoints();
    for (size_t i = 1; i + 1 < bks.size(); ++i)
        f.walls.push_back(bks[i]);

    // Construction contract: the density is certifiably nonnegative.
    for (size_t i = 0; i < f.density.piece_count(); ++i) {
        auto [a, b] = f.density.piece_interval(i);
        auto sv = sign_on_interval(f.density.piece(i), a, b);
        if (sv.negative_at)
            throw std::logic_error("dh_compute: density certified negative at t=" +
                                   sv.negative_at->str());
    }
    return f;
}

// One fixed component per polytope vertex: level = <w,v>, weights = <w,e>
// over the primitive edge generators at v. Rejects projections orthogonal to
// any edge (positive-dimensional fixed sets are out of scope).
inline std::vector<FixedComponent> fixed_components(const ToricModel& model) {
    model.validate();
    if (model.rank() != 1)
        throw std::invalid_argument("fixed_components: projection rank k = 1 required");
    if (!model.polytope.full_dimensional())
        throw std::invalid_argument("fixed_components: polytope is not full-dimensional");
    const IntVec& w = model.projection.front();
    const auto& verts = model.polytope.vertices();
    const auto edges = polytope_edges(model.polytope);

    auto point_str = [](const Point& p) {
        std::ostringstream os;
        os << "(";
        for (size_t i = 0; i < p.size(); ++i)
            os << (i ? "," : "") << p[i].str();
        os << ")";
        return os.str();
    };

    std::vector<std::vector<Rational>> weights(verts.size());
    for (const auto& [i, j] : edges) {
        RatVec dir(verts[i].size());
        for (size_t c = 0; c < dir.size(); ++c)
            dir[c] = verts[j][c] - verts[i][c];
        IntVec gen = detail::primitive_integer(dir);
        Rational wt(0);
        for (size_t c = 0; c < gen.size(); ++c)
            wt += Rational(gen[c]) * Rational(w[c]);
        if (wt.is_zero())
            throw GenericityError("fixed_components: projection is orthogonal to the edge between " +
                                  point_str(verts[i]) + " and " + point_str(verts[j]));
        weights[i].push_back(wt);
        weights[j].push_back(-wt);
    }

    std::vector<FixedComponent> out;
    out.reserve(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        FixedComponent fc;
        fc.level = dot(w, verts[i]);
        fc.weights = std::move(weights[i]);
        fc.reduced_volume = Rational(1);
        out.push_back(std::move(fc));
    }
    return out;
}

// Leading jump polynomial across the wall at level a:
//   sum over components of  vol(X_a) * (prod_i alpha_i)^{-1} * t^{d-1}/(d-1)!
// where d is the number of weights of the component.
inline UniPoly gls_jump(const std::vector<FixedComponent>& components, const Rational& a) {
    UniPoly jump;
    for (const auto& c : components) {
        if (c.level != a)
            throw std::invalid_argument("gls_jump: component level " + c.level.str() +
                                        " differs from wall level " + a.str());
        if (c.weights.empty())
            throw std::invalid_argument("gls_jump: component without weights");
        Rational prod(1);
        for (const auto& alpha : c.weights) {
            if (alpha.is_zero())
                throw std::invalid_argument("gls_jump: zero weight");
            prod *= alpha;
        }
        const int d = static_cast<int>(c.weights.size());
        Rational fact(1);
        for (int i = 2; i < d; ++i)
            fact *= Rational(i);
        jump = jump + UniPoly::monomial(d - 1, c.reduced_volume / (prod * fact));
    }
    return jump;
}

// Taylor recentering of the density jump at a: right piece minus the left
// piece continued across a, both as polynomials in the local offset.
inline UniPoly measured_jump(const DHFunction& f, const Rational& a) {
    UniPoly left, right;
    if (auto i = f.density.piece_left_of(a))
        left = f.density.piece(*i);
    if (auto i = f.density.piece_right_of(a))
        right = f.density.piece(*i);
    return (right - left).compose_affine(Rational(1), a);
}

inline std::optional<std::pair<int, Rational>> lowest_term(const UniPoly& p) {
    if (p.is_zero())
        return std::nullopt;
    for (int i = 0; i <= *p.degree(); ++i)
        if (!p.coeff(i).is_zero())
            return std::make_pair(i, p.coeff(i));
    return std::nullopt;
}

struct DegreeCheck {
    bool pass = true;
    int max_degree = -1;
    int bound = 0;
};

// Chamber polynomial degrees are bounded by n-k; complexity one (n-k = 1)
// forces degree <= 1.
inline DegreeCheck degree_check(const DHFunction& f) {
    DegreeCheck v;
    v.bound = f.n - f.k;
    for (const auto& p : f.density.pieces())
        if (auto d = p.degree())
            v.max_degree = std::max(v.max_degree, *d);
    v.pass = v.max_degree <= v.bound;
    return v;
}

}  // namespace dhtk

#pragma once

// Exact convex polytopes in dimension <= 4: vertex representation with
// irredundant vertex lists, beneath-beyond (placing) triangulation with a
// deterministic lexicographic insertion order, volumes, halfspace cuts and
// vertex enumeration from constraint systems.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace dhtk {

using Point = std::vector<Rational>;
using IntVec = std::vector<BigInt>;

// Constraint <x, normal> >= bound.
struct Halfspace {
    IntVec normal;
    Rational bound;
};

inline Rational dot(const IntVec& n, const Point& x) {
    if (n.size() != x.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s(0);
    for (size_t i = 0; i < n.size(); ++i)
        s += Rational(n[i]) * x[i];
    return s;
}

inline bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Simplex {
    int dim = 0;
    std::vector<Point> verts;  // dim+1 affinely independent points

    Rational volume() const {
        RatMat m;
        for (size_t i = 1; i < verts.size(); ++i) {
            RatVec row(verts[i].size());
            for (size_t j = 0; j < row.size(); ++j)
                row[j] = verts[i][j] - verts[0][j];
            m.push_back(std::move(row));
        }
        Rational d = linalg::det(m);
        Rational fact(1);
        for (int k = 2; k <= dim; ++k)
            fact *= Rational(k);
        return d.abs() / fact;
    }
};

// Supporting hyperplane with primitive integer normal, oriented outward:
// <normal, x> <= offset holds on the polytope.
struct FacetPlane {
    IntVec normal;
    Rational offset;

    bool operator<(const FacetPlane& o) const {
        if (normal != o.normal)
            return normal < o.normal;
        return offset < o.offset;
    }
    bool operator==(const FacetPlane& o) const {
        return normal == o.normal && offset == o.offset;
    }
};

namespace detail {

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

// Scale a rational direction to a primitive integer vector, keeping sign.
inline IntVec primitive_integer(const RatVec& v) {
    BigInt den_lcm = 1;
    for (const auto& c : v)
        if (!c.is_zero())
            den_lcm = lcm(den_lcm, c.denominator());
    IntVec iv(v.size());
    BigInt g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        iv[i] = v[i].numerator() * (den_lcm / v[i].denominator());
        g = gcd(g, iv[i]);
    }
    if (g > 1)
        for (auto& x : iv)
            x /= g;
    return iv;
}

inline size_t affine_rank(const std::vector<Point>& pts) {
    if (pts.size() <= 1)
        return 0;
    RatMat m;
    for (size_t i = 1; i < pts.size(); ++i)
        m.push_back(sub(pts[i], pts[0]));
    return linalg::rank(std::move(m));
}

// Hyperplane through d affinely independent points of R^d, oriented so the
// reference point lies strictly on the <= side.
inline FacetPlane plane_through(const std::vector<Point>& pts, const std::vector<size_t>& verts,
                                const Point& reference) {
    const size_t d = pts[verts[0]].size();
    RatVec normal;
    if (d == 1) {
        normal = {Rational(1)};
    } else {
        RatMat rows;
        for (size_t i = 1; i < verts.size(); ++i)
            rows.push_back(sub(pts[verts[i]], pts[verts[0]]));
        auto ns = linalg::nullspace(std::move(rows));
        if (ns.size() != 1)
            throw std::runtime_error("plane_through: facet points not affinely independent");
        normal = ns[0];
    }
    FacetPlane fp;
    fp.normal = primitive_integer(normal);
    fp.offset = dot(fp.normal, pts[verts[0]]);
    Rational side = dot(fp.normal, reference);
    if (side == fp.offset)
        throw std::runtime_error("plane_through: reference point on facet plane");
    if (side > fp.offset) {
        for (auto& x : fp.normal)
            x = -x;
        fp.offset = -fp.offset;
    }
    return fp;
}

struct HullResult {
    std::vector<std::vector<size_t>> cells;  // index (d+1)-tuples into the input
    std::vector<FacetPlane> planes;          // deduplicated supporting hyperplanes
    std::vector<size_t> extreme;             // indices of extreme input points
};

// Incremental beneath-beyond over a full-dimensional point set, inserting in
// the given order. Points inside (or on) the running hull are skipped, which
// never skips an extreme point of the full set.
inline HullResult hull_full_dim(const std::vector<Point>& pts, std::vector<size_t> order) {
    const size_t d = pts.at(0).size();

    // Greedy initial simplex in insertion order.
    std::vector<size_t> init;
    std::vector<Point> chosen;
    for (size_t idx : order) {
        chosen.push_back(pts[idx]);
        if (affine_rank(chosen) == chosen.size() - 1) {
            init.push_back(idx);
        } else {
            chosen.pop_back();
        }
        if (init.size() == d + 1)
            break;
    }
    if (init.size() != d + 1)
        throw std::invalid_argument("hull: point set is not full-dimensional");

    Point centroid(d, Rational(0));
    for (size_t idx : init)
        for (size_t j = 0; j < d; ++j)
            centroid[j] += pts[idx][j];
    for (size_t j = 0; j < d; ++j)
        centroid[j] /= Rational(static_cast<long long>(d + 1));

    HullResult res;
    std::vector<size_t> first(init);
    std::sort(first.begin(), first.end());
    res.cells.push_back(first);

    std::map<std::vector<size_t>, FacetPlane> facets;
    for (size_t skip = 0; skip <= d; ++skip) {
        std::vector<size_t> fv;
        for (size_t i = 0; i <= d; ++i)
            if (i != skip)
                fv.push_back(first[i]);
        facets.emplace(fv, plane_through(pts, fv, centroid));
    }

    for (size_t idx : order) {
        if (std::find(init.begin(), init.end(), idx) != init.end())
            continue;
        const Point& p = pts[idx];
        std::vector<std::vector<size_t>> visible;
        for (const auto& [fv, plane] : facets)
            if (dot(plane.normal, p) > plane.offset)
                visible.push_back(fv);
        if (visible.empty())
            continue;  // inside or on the current hull

        std::map<std::vector<size_t>, int> ridge_count;
        for (const auto& fv : visible) {
            std::vector<size_t> cell(fv);
            cell.push_back(idx);
            std::sort(cell.begin(), cell.end());
            res.cells.push_back(std::move(cell));
            for (size_t skip = 0; skip < fv.size(); ++skip) {
                std::vector<size_t> ridge;
                for (size_t i = 0; i < fv.size(); ++i)
                    if (i != skip)
                        ridge.push_back(fv[i]);
                ++ridge_count[ridge];
            }
            facets.erase(fv);
        }
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1)
                continue;
            std::vector<size_t> fv(ridge);
            fv.push_back(idx);
            std::sort(fv.begin(), fv.end());
            facets.emplace(fv, plane_through(pts, fv, centroid));
        }
    }

    std::map<FacetPlane, bool> plane_set;
    for (const auto& [fv, plane] : facets)
        plane_set.emplace(plane, true);
    for (const auto& [plane, unused] : plane_set)
        res.planes.push_back(plane);

    for (size_t i = 0; i < pts.size(); ++i) {
        RatMat tight;
        for (const auto& plane : res.planes) {
            if (dot(plane.normal, pts[i]) == plane.offset) {
                RatVec row(d);
                for (size_t j = 0; j < d; ++j)
                    row[j] = Rational(plane.normal[j]);
                tight.push_back(std::move(row));
            }
        }
        if (!tight.empty() && linalg::rank(std::move(tight)) == d)
            res.extreme.push_back(i);
    }
    return res;
}

// Extreme-point indices of an arbitrary deduplicated point set, working in
// the affine hull when the set is lower-dimensional.
inline std::vector<size_t> extreme_indices(size_t dim, const std::vector<Point>& pts) {
    if (pts.empty())
        return {};
    if (pts.size() == 1)
        return {0};

    std::vector<Point> basis;
    RatMat bmat;
    for (size_t i = 1; i < pts.size(); ++i) {
        Point v = sub(pts[i], pts[0]);
        bmat.push_back(v);
        if (linalg::rank(bmat) == basis.size() + 1)
            basis.push_back(std::move(v));
        else
            bmat.pop_back();
    }
    const size_t r = basis.size();
    if (r == 0)
        return {0};

    if (r == dim) {
        std::vector<size_t> order(pts.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        return hull_full_dim(pts, order).extreme;
    }

    // Coordinates in the affine hull, then recurse at full rank.
    RatMat bt(dim, RatVec(r));
    for (size_t j = 0; j < r; ++j)
        for (size_t i = 0; i < dim; ++i)
            bt[i][j] = basis[j][i];
    std::vector<Point> coords;
    coords.reserve(pts.size());
    for (const auto& p : pts) {
        auto lambda = linalg::solve(bt, sub(p, pts[0]));
        if (!lambda)
            throw std::runtime_error("extreme_indices: point outside affine hull");
        coords.push_back(std::move(*lambda));
    }
    return extreme_indices(r, coords);
}

}  // namespace detail

// Vertex representation. Vertices are irredundant (each one is an extreme
// point of the hull) and stored in lexicographic order, so vertex-set
// equality is plain equality.
class VRep {
public:
    VRep() = default;

    static VRep from_points(int dim, std::vector<Point> pts) {
        if (dim <= 0)
            throw std::invalid_argument("VRep: dimension must be positive");
        for (const auto& p : pts)
            if (static_cast<int>(p.size()) != dim)
                throw std::invalid_argument("VRep: point dimension mismatch");
        std::sort(pts.begin(), pts.end(), lex_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        VRep v;
        v.dim_ = dim;
        if (pts.empty())
            return v;
        auto keep = detail::extreme_indices(static_cast<size_t>(dim), pts);
        for (size_t i : keep)
            v.verts_.push_back(pts[i]);
        v.affine_dim_ = static_cast<int>(detail::affine_rank(v.verts_));
        return v;
    }

    int dim() const { return dim_; }
    bool empty() const { return verts_.empty(); }
    int affine_dim() const { return empty() ? -1 : affine_dim_; }
    bool full_dimensional() const { return !empty() && affine_dim_ == dim_; }
    const std::vector<Point>& vertices() const { return verts_; }

    bool operator==(const VRep& o) const { return dim_ == o.dim_ && verts_ == o.verts_; }
    bool operator!=(const VRep& o) const { return !(*this == o); }

private:
    int dim_ = 0;
    int affine_dim_ = 0;
    std::vector<Point> verts_;
};

class HRep {
public:
    HRep(int dim, std::vector<Halfspace> constraints)
        : dim_(dim), cs_(std::move(constraints)) {
        for (const auto& h : cs_) {
            if (static_cast<int>(h.normal.size()) != dim_)
                throw std::invalid_argument("HRep: constraint dimension mismatch");
            bool nonzero = false;
            for (const auto& x : h.normal)
                nonzero = nonzero || x != 0;
            if (!nonzero)
                throw std::invalid_argument("HRep: zero constraint normal");
        }
    }

    int dim() const { return dim_; }
    const std::vector<Halfspace>& constraints() const { return cs_; }

private:
    int dim_;
    std::vector<Halfspace> cs_;
};

// Placing triangulation with explicit insertion order (testing hook); the
// canonical entry point below uses the lexicographic vertex order.
inline std::vector<Simplex> triangulate_with_order(const VRep& p, std::vector<size_t> order) {
    if (p.empty() || !p.full_dimensional())
        throw std::invalid_argument("triangulate: polytope is not full-dimensional");
    auto hull = detail::hull_full_dim(p.vertices(), std::move(order));
    std::vector<Simplex> cells;
    cells.reserve(hull.cells.size());
    for (const auto& c : hull.cells) {
        Simplex s;
        s.dim = p.dim();
        for (size_t i : c)
            s.verts.push_back(p.vertices()[i]);
        cells.push_back(std::move(s));
    }
    return cells;
}

inline std::vector<Simplex> triangulate(const VRep& p) {
    std::vector<size_t> order(p.vertices().size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    return triangulate_with_order(p, std::move(order));
}

inline Rational volume(const VRep& p) {
    if (p.empty() || !p.full_dimensional())
        return Rational(0);
    Rational total(0);
    for (const auto& s : triangulate(p))
        total += s.volume();
    return total;
}

// Outward supporting hyperplanes of a full-dimensional polytope.
inline std::vector<FacetPlane> facet_planes(const VRep& p) {
    if (p.empty() || !p.full_dimensional())
        throw std::invalid_argument("facet_planes: polytope is not full-dimensional");
    std::vector<size_t> order(p.vertices().size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    return detail::hull_full_dim(p.vertices(), std::move(order)).planes;
}

inline bool contains(const VRep& p, const Point& x) {
    for (const auto& plane : facet_planes(p))
        if (dot(plane.normal, x) > plane.offset)
            return false;
    return true;
}

// Vertex index pairs forming the 1-faces: the supporting hyperplanes tight at
// both endpoints must have rank dim-1.
inline std::vector<std::pair<size_t, size_t>> polytope_edges(const VRep& p) {
    const auto planes = facet_planes(p);
    const auto& verts = p.vertices();
    const size_t d = static_cast<size_t>(p.dim());
    std::vector<std::vector<size_t>> tight(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t f = 0; f < planes.size(); ++f)
            if (dot(planes[f].normal, verts[i]) == planes[f].offset)
                tight[i].push_back(f);
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            RatMat m;
            std::vector<size_t> common;
            std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(),
                                  tight[j].end(), std::back_inserter(common));
            for (size_t f : common) {
                RatVec row(d);
                for (size_t c = 0; c < d; ++c)
                    row[c] = Rational(planes[f].normal[c]);
                m.push_back(std::move(row));
            }
            if (!m.empty() && linalg::rank(std::move(m)) == d - 1)
                edges.emplace_back(i, j);
        }
    }
    return edges;
}

// P intersected with the halfspaces. Candidate vertices: the feasible
// vertices of P plus every crossing point of a vertex pair, re-canonicalized.
inline VRep cut(const VRep& p, const std::vector<Halfspace>& halfspaces) {
    std::vector<Point> pts = p.vertices();
    for (const auto& h : halfspaces) {
        if (static_cast<int>(h.normal.size()) != p.dim())
            throw std::invalid_argument("cut: halfspace dimension mismatch");
        std::vector<Point> next;
        std::vector<Rational> vals;
        vals.reserve(pts.size());
        for (const auto& v : pts)
            vals.push_back(dot(h.normal, v));
        for (size_t i = 0; i < pts.size(); ++i)
            if (vals[i] >= h.bound)
                next.push_back(pts[i]);
        for (size_t i = 0; i < pts.size(); ++i) {
            for (size_t j = i + 1; j < pts.size(); ++j) {
                if ((vals[i] > h.bound && vals[j] < h.bound) ||
                    (vals[i] < h.bound && vals[j] > h.bound)) {
                    Rational s = (vals[i] - h.bound) / (vals[i] - vals[j]);
                    Point x(pts[i].size());
                    for (size_t c = 0; c < x.size(); ++c)
                        x[c] = pts[i][c] + s * (pts[j][c] - pts[i][c]);
                    next.push_back(std::move(x));
                }
            }
        }
        pts = std::move(next);
        if (pts.empty())
            break;
    }
    return VRep::from_points(p.dim(), std::move(pts));
}

// Image interval of the polytope under <w,.> plus the sorted deduplicated
// vertex images (wall candidates).
inline std::pair<Interval, std::vector<Rational>> support_and_criticals(const VRep& p,
                                                                        const IntVec& w) {
    bool nonzero = false;
    for (const auto& x : w)
        nonzero = nonzero || x != 0;
    if (!nonzero)
        throw std::invalid_argument("support_and_criticals: zero direction");
    if (p.empty())
        throw std::invalid_argument("support_and_criticals: empty polytope");
    std::vector<Rational> images;
    images.reserve(p.vertices().size());
    for (const auto& v : p.vertices())
        images.push_back(dot(w, v));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return {Interval::closed(images.front(), images.back()), images};
}

// Exact vertex enumeration for bounded constraint systems in dimension <= 4:
// solve every dim-subset of constraints and keep the feasible solutions.
inline VRep vertices_from_hrep(const HRep& h) {
    const int d = h.dim();
    if (d > 4)
        throw std::invalid_argument("vertices_from_hrep: dimension > 4 not supported");
    const auto& cs = h.constraints();
    const size_t m = cs.size();

    auto row_of = [&](const Halfspace& c) {
        RatVec row(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j)
            row[static_cast<size_t>(j)] = Rational(c.normal[static_cast<size_t>(j)]);
        return row;
    };

    auto feasible = [&](const Point& x) {
        for (const auto& c : cs)
            if (dot(c.normal, x) < c.bound)
                return false;
        return true;
    };

    // Recession-cone probe: a line in the kernel of all normals, or an
    // extreme ray tight on d-1 independent constraints.
    auto recession_direction = [&]() -> std::optional<RatVec> {
        RatMat all;
        for (const auto& c : cs)
            all.push_back(row_of(c));
        auto kernel = linalg::nullspace(all);
        if (!kernel.empty())
            return kernel.front();
        auto try_subset = [&](const std::vector<size_t>& subset) -> std::optional<RatVec> {
            RatMat msub;
            for (size_t i : subset)
                msub.push_back(row_of(cs[i]));
            auto ns = linalg::nullspace(msub);
            if (ns.size() != 1)
                return std::nullopt;
            for (int sign = 0; sign < 2; ++sign) {
                RatVec y = ns[0];
                if (sign) {
                    for (auto& c : y)
                        c = -c;
                }
                bool ok = true;
                for (const auto& c : cs) {
                    Rational s(0);
                    for (int j = 0; j < d; ++j)
                        s += Rational(c.normal[static_cast<size_t>(j)]) * y[static_cast<size_t>(j)];
                    if (s < Rational(0)) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    return y;
            }
            return std::nullopt;
        };
        if (d == 1) {
            // Rays are just +/-1.
            for (int sgn : {1, -1}) {
                bool ok = true;
                for (const auto& c : cs)
                    if (Rational(c.normal[0]) * Rational(sgn) < Rational(0))
                        ok = false;
                if (ok)
                    return RatVec{Rational(sgn)};
            }
            return std::nullopt;
        }
        std::vector<size_t> subset;
        std::function<std::optional<RatVec>(size_t)> rec = [&](size_t start) -> std::optional<RatVec> {
            if (subset.size() == static_cast<size_t>(d - 1)) {
                return try_subset(subset);
            }
            for (size_t i = start; i < m; ++i) {
                subset.push_back(i);
                if (auto r = rec(i + 1))
                    return r;
                subset.pop_back();
            }
            return std::nullopt;
        };
        return rec(0);
    };

    auto enumerate_vertices = [&](const std::vector<Halfspace>& constraints) {
        std::vector<Point> found;
        const size_t mm = constraints.size();
        std::vector<size_t> subset;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (subset.size() == static_cast<size_t>(d)) {
                RatMat a;
                RatVec b;
                for (size_t i : subset) {
                    RatVec row(static_cast<size_t>(d));
                    for (int j = 0; j < d; ++j)
                        row[static_cast<size_t>(j)] =
                            Rational(constraints[i].normal[static_cast<size_t>(j)]);
                    a.push_back(std::move(row));
                    b.push_back(constraints[i].bound);
                }
                if (auto x = linalg::solve_unique(a, b))
                    if (feasible(*x))
                        found.push_back(*x);
                return;
            }
            for (size_t i = start; i < mm; ++i) {
                subset.push_back(i);
                rec(i + 1);
                subset.pop_back();
            }
        };
        rec(0);
        return found;
    };

    auto vertices = enumerate_vertices(cs);
    auto ray = recession_direction();
    if (!ray) {
        // Pointed and bounded-or-empty: the vertex list is the answer.
        return VRep::from_points(d, std::move(vertices));
    }

    // Recession cone is nontrivial: distinguish unbounded from empty with a
    // Cramer-style coordinate bound box. After clearing denominators the
    // integer entries are at most maxentry^2, and any minimal-face point has
    // coordinates bounded by d! * (maxentry^2)^d.
    BigInt maxentry = 1;
    auto bump = [&maxentry](const BigInt& x) {
        BigInt a = x < 0 ? BigInt(-x) : x;
        if (a > maxentry)
            maxentry = a;
    };
    for (const auto& c : cs) {
        for (const auto& e : c.normal)
            bump(e);
        bump(c.bound.numerator());
        bump(c.bound.denominator());
    }
    BigInt big = 1;
    for (int k = 1; k <= d; ++k)
        big *= BigInt(k) * maxentry * maxentry;
    Rational bound(BigInt(big + 1));
    std::vector<Halfspace> boxed = cs;
    for (int j = 0; j < d; ++j) {
        IntVec e(static_cast<size_t>(d), BigInt(0));
        e[static_cast<size_t>(j)] = 1;
        boxed.push_back({e, -bound});
        IntVec en(static_cast<size_t>(d), BigInt(0));
        en[static_cast<size_t>(j)] = -1;
        boxed.push_back({en, -bound});
    }
    bool nonempty = false;
    for (const auto& x : enumerate_vertices(boxed)) {
        if (feasible(x)) {
            nonempty = true;
            break;
        }
    }
    if (nonempty)
        throw std::invalid_argument("vertices_from_hrep: polyhedron is unbounded");
    return VRep::from_points(d, {});
}

}  // namespace dhtk

#pragma once

// Seeded Monte-Carlo oracle for DH densities, independent of the exact
// divided-difference path: rejection sampling of the polytope inside its
// bounding box with the counter-based generator from rng.hpp, and a plain
// histogram on bins that shrink as N grows (width ~ N^{-1/(k+2)}).
//
// This is a floating-point estimator with reported standard errors; no exact
// verdict depends on it. Sample i draws its coordinates from counters
// i*dim .. i*dim+dim-1, so the result is a pure function of (seed, N, model)
// no matter how the loop is scheduled or sharded.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polytope.hpp"
#include "pushforward.hpp"
#include "rng.hpp"

namespace dhtk {

struct MCEstimate {
    std::vector<std::vector<Rational>> sample_points;  // k-vectors; scalars for k=1
    std::vector<double> estimates;
    std::vector<double> stderrs;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    double bin_width = 0.0;  // along each projection row, scaled per row
};

inline MCEstimate dh_mc_oracle(const ToricModel& model, std::int64_t n_samples,
                               std::uint64_t seed,
                               const std::vector<std::vector<Rational>>& sample_points) {
    model.validate();
    if (!model.polytope.full_dimensional())
        throw std::invalid_argument("dh_mc_oracle: polytope is degenerate (not full-dimensional)");
    if (n_samples < 10000)
        throw std::invalid_argument("dh_mc_oracle: need at least 10^4 samples");
    const size_t d = static_cast<size_t>(model.ambient_dim());
    const size_t k = static_cast<size_t>(model.rank());
    for (const auto& q : sample_points)
        if (q.size() != k)
            throw std::invalid_argument("dh_mc_oracle: sample point rank mismatch");

    // Bounding box.
    const auto& verts = model.polytope.vertices();
    std::vector<double> lo(d), hi(d);
    for (size_t c = 0; c < d; ++c) {
        Rational mn = verts[0][c], mx = verts[0][c];
        for (const auto& v : verts) {
            mn = min(mn, v[c]);
            mx = max(mx, v[c]);
        }
        lo[c] = mn.to_double();
        hi[c] = mx.to_double();
    }
    double box_vol = 1.0;
    for (size_t c = 0; c < d; ++c)
        box_vol *= hi[c] - lo[c];

    // Facets in double precision; boundary ties are measure zero.
    std::vector<std::vector<double>> fnorm;
    std::vector<double> foff;
    for (const auto& plane : facet_planes(model.polytope)) {
        std::vector<double> row(d);
        for (size_t c = 0; c < d; ++c)
            row[c] = plane.normal[c].convert_to<double>();
        fnorm.push_back(std::move(row));
        foff.push_back(plane.offset.to_double());
    }

    std::vector<std::vector<double>> proj(k, std::vector<double>(d));
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < d; ++c)
            proj[r][c] = model.projection[r][c].convert_to<double>();

    // Bin widths from the support length along each projection row.
    const double shrink = std::pow(static_cast<double>(n_samples),
                                   -1.0 / (static_cast<double>(k) + 2.0));
    std::vector<double> h(k);
    for (size_t r = 0; r < k; ++r) {
        auto [support, criticals] = support_and_criticals(model.polytope, model.projection[r]);
        h[r] = (*support.hi - *support.lo).to_double() * shrink;
    }

    std::vector<std::vector<double>> centers;
    for (const auto& q : sample_points) {
        std::vector<double> c(k);
        for (size_t r = 0; r < k; ++r)
            c[r] = q[r].to_double();
        centers.push_back(std::move(c));
    }

    CounterRng rng(seed);
    std::vector<std::int64_t> counts(sample_points.size(), 0);
    std::vector<double> x(d), y(k);
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * d;
        for (size_t c = 0; c < d; ++c)
            x[c] = lo[c] + rng.uniform01(base + c) * (hi[c] - lo[c]);
        bool inside = true;
        for (size_t f = 0; f < fnorm.size() && inside; ++f) {
            double s = 0.0;
            for (size_t c = 0; c < d; ++c)
                s += fnorm[f][c] * x[c];
            inside = s <= foff[f];
        }
        if (!inside)
            continue;
        for (size_t r = 0; r < k; ++r) {
            double s = 0.0;
            for (size_t c = 0; c < d; ++c)
                s += proj[r][c] * x[c];
            y[r] = s;
        }
        for (size_t q = 0; q < centers.size(); ++q) {
            bool hit = true;
            for (size_t r = 0; r < k && hit; ++r)
                hit = std::fabs(y[r] - centers[q][r]) <= h[r] / 2.0;
            if (hit)
                ++counts[q];
        }
    }

    double bin_vol = 1.0;
    for (size_t r = 0; r < k; ++r)
        bin_vol *= h[r];

    MCEstimate out;
    out.sample_points = sample_points;
    out.seed = seed;
    out.samples = n_samples;
    out.bin_width = shrink;
    const double nn = static_cast<double>(n_samples);
    for (size_t q = 0; q < counts.size(); ++q) {
        const double p = static_cast<double>(counts[q]) / nn;
        out.estimates.push_back(p * box_vol / bin_vol);
        out.stderrs.push_back(std::sqrt(p * (1.0 - p) / nn) * box_vol / bin_vol);
    }
    return out;
}

inline MCEstimate dh_mc_oracle(const ToricModel& model, std::int64_t n_samples,
                               std::uint64_t seed, const std::vector<Rational>& abscissae) {
    std::vector<std::vector<Rational>> pts;
    pts.reserve(abscissae.size());
    for (const auto& t : abscissae)
        pts.push_back({t});
    return dh_mc_oracle(model, n_samples, seed, pts);
}

}  // namespace dhtk

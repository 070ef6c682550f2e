#include "lmoam/reference_front.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace lmoam::lsmop {

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// All compositions of `divisions` into m nonnegative parts, scaled to sum 1.
std::vector<ObjectiveVector> simplex_lattice(std::size_t m, std::size_t divisions)
{
    std::vector<ObjectiveVector> out;
    std::vector<std::size_t> parts(m, 0);
    const auto h = static_cast<double>(divisions);
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t axis, std::size_t left) {
        if (axis + 1 == m) {
            parts[axis] = left;
            ObjectiveVector p(m);
            for (std::size_t i = 0; i < m; ++i) {
                p[i] = static_cast<double>(parts[i]) / h;
            }
            out.push_back(std::move(p));
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            parts[axis] = v;
            fill(axis + 1, left - v);
        }
    };
    fill(0, divisions);
    return out;
}

ObjectiveVector random_simplex_point(std::size_t m, RngStream& rng)
{
    ObjectiveVector p(m);
    double total = 0.0;
    for (auto& v : p) {
        v = rng.exponential();
        total += v;
    }
    for (auto& v : p) {
        v /= total;
    }
    return p;
}

std::vector<ObjectiveVector> simplex_sample(std::size_t m, std::size_t n, RngStream& rng)
{
    std::size_t h = 1;
    while (simplex_lattice_size(m, h + 1) <= n) {
        ++h;
    }
    auto points = simplex_lattice_size(m, h) <= n ? simplex_lattice(m, h) : std::vector<ObjectiveVector>{};
    while (points.size() < n) {
        points.push_back(random_simplex_point(m, rng));
    }
    return points;
}

double dtlz7_bump(double x)
{
    return x * (1.0 + std::sin(3.0 * std::numbers::pi * x));
}

double dtlz7_bump_slope(double x)
{
    const double a = 3.0 * std::numbers::pi * x;
    return 1.0 + std::sin(a) + 3.0 * std::numbers::pi * x * std::cos(a);
}

// Bisection keeping the end where pred holds.
double bisect(double lo, double hi, const std::function<bool(double)>& pred_lo)
{
    for (int it = 0; it < 200 && lo < hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (pred_lo(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

} // namespace

std::size_t simplex_lattice_size(std::size_t m, std::size_t divisions)
{
    return binomial(divisions + m - 1, m - 1);
}

std::array<double, 4> disconnected_intervals()
{
    // First local maximum of the bump; keep the side where the slope is still
    // positive so the first interval is strictly increasing.
    const double a1 = bisect(0.1, 0.3, [](double x) { return dtlz7_bump_slope(x) > 0.0; });
    const double peak = dtlz7_bump(a1);
    // Rising branch after the dip: first x whose bump exceeds the first peak.
    double b0 = bisect(0.5, 0.75, [peak](double x) { return dtlz7_bump(x) <= peak; });
    while (dtlz7_bump(b0) <= peak) {
        b0 = std::nextafter(b0, 1.0);
    }
    const double b1 = bisect(0.75, 0.95, [](double x) { return dtlz7_bump_slope(x) > 0.0; });
    return {0.0, a1, b0, b1};
}

ReferenceFront sample_reference_front(int id, std::size_t m, std::size_t n_points, RngStream& rng)
{
    const auto& def = definition(id);
    if (m < 2) {
        throw std::invalid_argument("sample_reference_front: m must be >= 2");
    }
    if (n_points < m) {
        throw std::invalid_argument("sample_reference_front: need at least m points");
    }
    ReferenceFront front;
    front.descriptor = "LSMOP" + std::to_string(id) + "/m" + std::to_string(m) + "/n" + std::to_string(n_points)
                     + "/seed" + std::to_string(rng.seed());

    switch (def.shape) {
    case FrontShape::linear:
        front.points = simplex_sample(m, n_points, rng);
        break;
    case FrontShape::spherical:
        front.points = simplex_sample(m, n_points, rng);
        for (auto& p : front.points) {
            double norm = 0.0;
            for (double v : p) {
                norm += v * v;
            }
            norm = std::sqrt(norm);
            for (auto& v : p) {
                v /= norm;
            }
        }
        break;
    case FrontShape::disconnected: {
        const auto iv = disconnected_intervals();
        const double first = iv[1] - iv[0];
        const double second = iv[3] - iv[2];
        const double split = first / (first + second);
        // Unit coordinate -> nondominated position value, preserving order.
        auto to_position = [&](double u) {
            return u <= split ? iv[0] + u / split * first : iv[2] + (u - split) / (1.0 - split) * second;
        };
        const std::size_t dims = m - 1;
        std::size_t per_axis = 1;
        while (std::pow(static_cast<double>(per_axis + 1), static_cast<double>(dims))
               <= static_cast<double>(n_points)) {
            ++per_axis;
        }
        std::size_t grid = 1;
        for (std::size_t i = 0; i < dims; ++i) {
            grid *= per_axis;
        }
        std::vector<std::vector<double>> coords;
        coords.reserve(n_points);
        if (per_axis >= 2) {
            std::vector<std::size_t> idx(dims, 0);
            for (std::size_t c = 0; c < grid; ++c) {
                std::vector<double> u(dims);
                std::size_t rem = c;
                for (std::size_t a = 0; a < dims; ++a) {
                    u[a] = static_cast<double>(rem % per_axis) / static_cast<double>(per_axis - 1);
                    rem /= per_axis;
                }
                coords.push_back(std::move(u));
            }
        }
        while (coords.size() < n_points) {
            std::vector<double> u(dims);
            for (auto& v : u) {
                v = rng.uniform();
            }
            coords.push_back(std::move(u));
        }
        for (const auto& u : coords) {
            ObjectiveVector p(m);
            double h = static_cast<double>(m);
            for (std::size_t a = 0; a < dims; ++a) {
                p[a] = to_position(u[a]);
                h -= 0.5 * dtlz7_bump(p[a]);
            }
            p[m - 1] = 2.0 * h;   // optimal distance variables give G = 1
            front.points.push_back(std::move(p));
        }
        break;
    }
    }
    return front;
}

} // namespace lmoam::lsmop

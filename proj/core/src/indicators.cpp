#include "lmoam/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace lmoam::indicators {

double igd(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference)
{
    if (front.empty()) {
        throw std::invalid_argument("igd: empty front");
    }
    if (reference.empty()) {
        throw std::invalid_argument("igd: empty reference front");
    }
    const std::size_t m = reference.front().size();
    for (const auto& f : front) {
        if (f.size() != m) {
            throw std::invalid_argument("igd: objective count mismatch");
        }
    }
    double total = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : front) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                const double diff = r[i] - f[i];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

double igd(std::span<const ObjectiveVector> front, const lsmop::ReferenceFront& reference)
{
    return igd(front, std::span<const ObjectiveVector>(reference.points));
}

namespace {

struct Point2 {
    double x;
    double y;
};

// Area dominated by a set of 2-D points, bounded by (rx, ry).
double area_2d(std::vector<Point2> pts, double rx, double ry)
{
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    double area = 0.0;
    double best_y = ry;
    for (const auto& p : pts) {
        if (p.y < best_y) {
            area += (rx - p.x) * (best_y - p.y);
            best_y = p.y;
        }
    }
    return area;
}

// Nondominated 2-D staircase (ascending x, strictly descending y) and the
// area it dominates inside [.., rx] x [.., ry].
class Staircase {
public:
    Staircase(double rx, double ry) : rx_(rx), ry_(ry) {}

    double area() const noexcept { return area_; }

    void insert(double x, double y)
    {
        auto it = steps_.upper_bound(x);
        if (it != steps_.begin() && std::prev(it)->second <= y) {
            return;   // weakly dominated
        }
        auto first = steps_.lower_bound(x);
        auto last = first;
        while (last != steps_.end() && last->second >= y) {
            ++last;
        }
        steps_.erase(first, last);
        steps_.emplace(x, y);
        refresh();
    }

private:
    void refresh()
    {
        area_ = 0.0;
        for (auto it = steps_.begin(); it != steps_.end(); ++it) {
            const auto next = std::next(it);
            const double right = next == steps_.end() ? rx_ : next->first;
            area_ += (right - it->first) * (ry_ - it->second);
        }
    }

    double rx_;
    double ry_;
    double area_ = 0.0;
    std::map<double, double> steps_;
};

} // namespace

double hv(std::span<const ObjectiveVector> front, std::span<const double> reference_point)
{
    const std::size_t m = reference_point.size();
    if (m != 2 && m != 3) {
        throw std::invalid_argument("hv: exact hypervolume supports only 2 or 3 objectives");
    }
    std::vector<ObjectiveVector> pts;
    for (const auto& f : front) {
        if (f.size() != m) {
            throw std::invalid_argument("hv: objective count mismatch");
        }
        bool inside = true;
        for (std::size_t i = 0; i < m; ++i) {
            inside = inside && f[i] < reference_point[i];
        }
        if (inside) {
            pts.push_back(f);
        }
    }
    if (pts.empty()) {
        return 0.0;
    }
    if (m == 2) {
        std::vector<Point2> p2;
        p2.reserve(pts.size());
        for (const auto& p : pts) {
            p2.push_back({p[0], p[1]});
        }
        return area_2d(std::move(p2), reference_point[0], reference_point[1]);
    }
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[2] < b[2]; });
    Staircase stairs(reference_point[0], reference_point[1]);
    double volume = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        stairs.insert(pts[i][0], pts[i][1]);
        const double next_z = i + 1 < pts.size() ? pts[i + 1][2] : reference_point[2];
        volume += stairs.area() * (next_z - pts[i][2]);
    }
    return volume;
}

double normalized_hv(std::span<const ObjectiveVector> front, std::span<const ObjectiveVector> reference)
{
    if (reference.empty()) {
        throw std::invalid_argument("normalized_hv: empty reference front");
    }
    const std::size_t m = reference.front().size();
    ObjectiveVector ideal(m, std::numeric_limits<double>::infinity());
    ObjectiveVector nadir(m, -std::numeric_limits<double>::infinity());
    for (const auto& r : reference) {
        for (std::size_t i = 0; i < m; ++i) {
            ideal[i] = std::min(ideal[i], r[i]);
            nadir[i] = std::max(nadir[i], r[i]);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!(nadir[i] > ideal[i])) {
            throw std::invalid_argument("normalized_hv: reference front is degenerate in objective "
                                        + std::to_string(i + 1));
        }
    }
    std::vector<ObjectiveVector> scaled;
    scaled.reserve(front.size());
    for (const auto& f : front) {
        if (f.size() != m) {
            throw std::invalid_argument("normalized_hv: objective count mismatch");
        }
        ObjectiveVector s(m);
        for (std::size_t i = 0; i < m; ++i) {
            s[i] = (f[i] - ideal[i]) / (nadir[i] - ideal[i]);
        }
        scaled.push_back(std::move(s));
    }
    const std::vector<double> ref(m, kNormalizedReference);
    return hv(scaled, ref);
}

double normalized_hv(std::span<const ObjectiveVector> front, const lsmop::ReferenceFront& reference)
{
    return normalized_hv(front, std::span<const ObjectiveVector>(reference.points));
}

} // namespace lmoam::indicators

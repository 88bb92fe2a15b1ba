#include "ilab/incidence.hpp"

#include <algorithm>
#include <tuple>

#include "ilab/error.hpp"
#include "ilab/parallel.hpp"

namespace ilab {

namespace {

struct Hit {
    Point3 point;
    std::size_t line;
    std::size_t circle;
};

std::vector<Hit> hits_for_line(const Scene& scene, std::size_t i) {
    std::vector<Hit> out;
    for (std::size_t j = 0; j < scene.circles.size(); ++j) {
        for (auto& p : line_circle_intersection(scene.lines[i], scene.circles[j])) {
            out.push_back({std::move(p), i, j});
        }
    }
    return out;
}

IncidenceReport group_hits(const Scene& scene, std::vector<Hit> hits) {
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (auto c = structural_cmp(a.point, b.point); c != 0) return c < 0;
        return std::tie(a.line, a.circle) < std::tie(b.line, b.circle);
    });
    IncidenceReport rep;
    rep.line_counts.assign(scene.lines.size(), 0);
    rep.circle_counts.assign(scene.circles.size(), 0);
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        IncidencePoint ip{hits[i].point, {}, {}};
        while (j < hits.size() && hits[j].point == hits[i].point) {
            ip.lines.push_back(hits[j].line);
            ip.circles.push_back(hits[j].circle);
            ++j;
        }
        std::sort(ip.lines.begin(), ip.lines.end());
        ip.lines.erase(std::unique(ip.lines.begin(), ip.lines.end()), ip.lines.end());
        std::sort(ip.circles.begin(), ip.circles.end());
        ip.circles.erase(std::unique(ip.circles.begin(), ip.circles.end()), ip.circles.end());
        for (auto l : ip.lines) ++rep.line_counts[l];
        for (auto c : ip.circles) ++rep.circle_counts[c];
        rep.points.push_back(std::move(ip));
        i = j;
    }
    if (rep.points.size() > 2 * scene.lines.size() * scene.circles.size()) {
        throw AlgorithmError("all_incidences: more than 2nm points");
    }
    return rep;
}

}  // namespace

std::size_t IncidenceReport::count_of(std::size_t curve) const {
    if (curve < line_counts.size()) return line_counts[curve];
    return circle_counts.at(curve - line_counts.size());
}

IncidenceReport all_incidences_serial(const Scene& scene) {
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < scene.lines.size(); ++i) {
        auto part = hits_for_line(scene, i);
        std::move(part.begin(), part.end(), std::back_inserter(hits));
    }
    return group_hits(scene, std::move(hits));
}

IncidenceReport all_incidences(const Scene& scene) {
    std::vector<std::vector<Hit>> per_line(scene.lines.size());
    parallel_for(scene.lines.size(), [&](std::size_t i) { per_line[i] = hits_for_line(scene, i); });
    std::vector<Hit> hits;
    for (auto& part : per_line) std::move(part.begin(), part.end(), std::back_inserter(hits));
    return group_hits(scene, std::move(hits));
}

}  // namespace ilab

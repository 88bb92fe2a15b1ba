#include <algorithm>
#include <cmath>

#include "ilab/detect.hpp"
#include "ilab/error.hpp"
#include "ilab/incidence.hpp"

namespace ilab {

BoundReport bound_report(const Scene& scene, const Rational& A, std::uint64_t seed) {
    if (A <= 0) throw ContractError("bound_report: A must be positive");
    BoundReport rep;
    rep.lines = scene.lines.size();
    rep.circles = scene.circles.size();
    rep.A = A;
    const unsigned long total = rep.lines + rep.circles;
    rep.points = all_incidences(scene).total_points();
    rep.rhs = 1000 * A * total;
    rep.bound_holds = Rational(static_cast<unsigned long>(rep.points)) <= rep.rhs;
    if (total > 0) rep.growth_ratio = static_cast<double>(rep.points) / std::pow(static_cast<double>(total), 1.5);
    // A >= 1e5 sqrt(k) with A > 0 is A^2 >= 1e10 k.
    const unsigned long k = std::min(rep.lines, rep.circles);
    rep.regime_holds = A * A >= Rational(Integer("10000000000") * k);

    const Integer ceil_a = ceil_of(A);
    rep.detect_threshold = std::max<std::size_t>(3, ceil_a.fits_ulong_p() ? ceil_a.get_ui() : scene.size() + 1);
    DetectOptions opt;
    opt.A = static_cast<unsigned long>(rep.detect_threshold);
    opt.seed = seed;
    const auto families = find_structured_families(scene, opt);
    if (!families.empty()) rep.largest_family = families.front().members.size();
    rep.family_reaches_A = rep.largest_family > 0 && Rational(static_cast<unsigned long>(rep.largest_family)) >= A;
    return rep;
}

}  // namespace ilab

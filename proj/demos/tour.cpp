// A short walk through the library: a Siegel disk, a basin, and a
// non-ergodic sphere map.

#include <iostream>

#include "padyn/padyn.hpp"

using namespace padyn;

int main()
{
    const MobiusMap rotation(0, 7, 2, 7);
    const FixedPointAnalysis fp = fixed_points(rotation, 12);
    const SiegelReport disk = siegel_analysis(rotation, fp);
    std::cout << "f(x) = x/(7x + 2) over Q_7\n"
              << "  x1 = " << fp.x1 << "  (" << fixed_point_kind_name(fp.class1) << ")\n"
              << "  x2 = " << fp.x2 << "  (" << fixed_point_kind_name(fp.class2) << ")\n"
              << "  Siegel disk radius " << disk.max_radius << ", disks " << disk_relation_name(disk.relation) << '\n';
    const SiegelWitness w = siegel_boundary_witness(rotation, fp);
    std::cout << "  boundary point at distance " << w.distance << " is sent to distance " << w.image_distance << "\n\n";

    const MobiusMap contraction(0, 1, Rational(1, 7), 7);
    const OrbitTrace orbit = iterate(contraction, Rational(3), 40, 12);
    std::cout << "f(x) = x/(x + 1/7) over Q_7, orbit of 3\n";
    for (std::size_t k = 0; k < orbit.points.size(); ++k)
        std::cout << "  |f^" << k + 1 << "(3)| = " << orbit.distances_to_target[k] << '\n';
    std::cout << "  " << orbit_termination_name(orbit.terminated) << "\n\n";

    const SphereMap sphere = SphereMap::validate(7, 2, 7);
    const ErgodicityReport erg = nonergodicity_witness(sphere, 3);
    std::cout << "on the unit sphere: " << erg.verdict << ", invariant set {";
    for (std::size_t i = 0; i < erg.witness->invariant_set.size(); ++i)
        std::cout << (i ? ", " : "") << erg.witness->invariant_set[i];
    std::cout << "} mod 7 with measure " << to_string(erg.witness->measure) << '\n';
}

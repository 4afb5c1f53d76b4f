#ifndef ARRTOP_ORACLE_HPP
#define ARRTOP_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop {

// Independent face-enumeration oracle: labels a seeded batch of random
// rational points, the origin, and random points inside every proper flat of
// the intersection lattice.  Sampled covectors must be a subset of the
// enumerated ones; at desk scale the two sets coincide.
struct OracleReport {
    bool subset = false;
    bool equal = false;
    std::size_t ambient_samples = 0;
    std::size_t flats = 0;
    std::size_t distinct = 0;
    std::vector<std::string> extra;    // sampled, not enumerated
    std::vector<std::string> missing;  // enumerated, never sampled
    std::string witness;

    bool pass() const { return subset && equal; }
};

OracleReport sampling_oracle(const Arrangement& a, const FacePoset& poset,
                             std::uint64_t seed, std::size_t ambient_samples = 10000);

} // namespace arrtop

#endif

#ifndef TWC_IO_HPP
#define TWC_IO_HPP

#include <iosfwd>
#include <memory>
#include <string>

#include "twc/twochar.hpp"

namespace twc {

/// A multiset file is `q k` on the first line followed by [k]_q multiplicities
/// in the global point order; a point-set file is the same with 0/1 entries.
/// A generator matrix file is `q k n` followed by k rows of n entries.

struct LoadedMultiset {
    std::unique_ptr<Geometry> geo;
    PointMultiset m;
};

LoadedMultiset read_multiset(std::istream& in);
LoadedMultiset read_multiset_file(const std::string& path);
LoadedMultiset read_pointset(std::istream& in);  // rejects entries outside {0,1}
LoadedMultiset read_pointset_file(const std::string& path);

GeneratorMatrix read_matrix(std::istream& in);
GeneratorMatrix read_matrix_file(const std::string& path);

std::string write_multiset(const PointMultiset& m);

/// JSON object with exactly the keys
/// g, mu, r, n, gamma, s, t, s0, t0, n_prime, gamma_prime, u, v, f, w1, w2.
std::string summary_to_json(const CanonicalSummary& cs);

std::string spectrum_to_text(const HyperplaneSpectrum& sp);

}  // namespace twc

#endif

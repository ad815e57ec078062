#include "twc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace twc {

namespace {

LoadedMultiset read_values(std::istream& in, bool pointset) {
    int q, k;
    if (!(in >> q >> k)) throw FormatError("expected header line `q k`");
    auto geo = std::make_unique<Geometry>(q, k);
    PointMultiset m = PointMultiset::zero(*geo);
    for (long long i = 0; i < geo->num_points(); ++i) {
        long long v;
        if (!(in >> v)) throw FormatError("expected " + std::to_string(geo->num_points()) +
                                          " multiplicities, got " + std::to_string(i));
        if (v < 0) throw NegativeMultiplicity(i);
        if (pointset && v > 1)
            throw FormatError("point-set entry " + std::to_string(v) + " at index " +
                              std::to_string(i) + " is not in {0,1}");
        m.mult[i] = v;
    }
    long long extra;
    if (in >> extra) throw FormatError("trailing data after multiplicities");
    return {std::move(geo), std::move(m)};
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return in;
}

}  // namespace

LoadedMultiset read_multiset(std::istream& in) { return read_values(in, false); }

LoadedMultiset read_multiset_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_multiset(in);
}

LoadedMultiset read_pointset(std::istream& in) { return read_values(in, true); }

LoadedMultiset read_pointset_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_pointset(in);
}

GeneratorMatrix read_matrix(std::istream& in) {
    GeneratorMatrix gm;
    if (!(in >> gm.q >> gm.k >> gm.n)) throw FormatError("expected header line `q k n`");
    if (gm.k < 1 || gm.n < 1) throw FormatError("matrix dimensions must be positive");
    gm.rows.assign(gm.k, std::vector<int>(gm.n));
    for (int i = 0; i < gm.k; ++i)
        for (long long j = 0; j < gm.n; ++j)
            if (!(in >> gm.rows[i][j])) throw FormatError("matrix entries truncated");
    int extra;
    if (in >> extra) throw FormatError("trailing data after matrix");
    return gm;
}

GeneratorMatrix read_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix(in);
}

std::string write_multiset(const PointMultiset& m) {
    std::ostringstream out;
    out << m.geo->q() << ' ' << m.geo->k() << '\n';
    for (long long i = 0; i < static_cast<long long>(m.mult.size()); ++i)
        out << m.mult[i] << (i + 1 == static_cast<long long>(m.mult.size()) ? '\n' : ' ');
    return out.str();
}

std::string summary_to_json(const CanonicalSummary& cs) {
    nlohmann::ordered_json j;
    j["g"] = cs.g;
    j["mu"] = cs.mu;
    j["r"] = cs.r;
    j["n"] = cs.n;
    j["gamma"] = cs.gamma;
    j["s"] = cs.s;
    j["t"] = cs.t;
    j["s0"] = cs.s0;
    j["t0"] = cs.t0;
    j["n_prime"] = cs.n_prime;
    j["gamma_prime"] = cs.gamma_prime;
    j["u"] = cs.u;
    j["v"] = cs.v;
    j["f"] = cs.f;
    j["w1"] = cs.w1;
    j["w2"] = cs.w2;
    return j.dump(2) + "\n";
}

std::string spectrum_to_text(const HyperplaneSpectrum& sp) {
    std::ostringstream out;
    for (const auto& [value, count] : sp.entries) out << value << ':' << count << '\n';
    return out.str();
}

}  // namespace twc

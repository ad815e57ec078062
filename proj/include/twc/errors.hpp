#ifndef TWC_ERRORS_HPP
#define TWC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPrimePower : Error {
    explicit NotAPrimePower(long long q)
        : Error("not a prime power: q=" + std::to_string(q)) {}
};

struct Overflow : Error {
    explicit Overflow(const std::string& what) : Error("integer overflow in " + what) {}
};

struct SizeLimit : Error {
    using Error::Error;
};

struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(int k, int need)
        : Error("operation requires k >= " + std::to_string(need) + ", got k=" + std::to_string(k)) {}
};

struct BadDimension : Error {
    using Error::Error;
};

struct NegativeMultiplicity : Error {
    long long point_index;
    explicit NegativeMultiplicity(long long idx)
        : Error("negative multiplicity at point index " + std::to_string(idx)), point_index(idx) {}
};

struct ComplementLevelTooSmall : Error {
    ComplementLevelTooSmall(long long l, long long gamma)
        : Error("complement level " + std::to_string(l) + " below maximum multiplicity " +
                std::to_string(gamma)) {}
};

struct TrivialMultiset : Error {
    TrivialMultiset() : Error("multiset is trivial (all multiplicities zero)") {}
};

struct NotTwoCharacter : Error {
    explicit NotTwoCharacter(std::size_t distinct)
        : Error("multiset is not two-character (" + std::to_string(distinct) +
                " distinct hyperplane multiplicities)") {}
};

struct DegenerateSet : Error {
    using Error::Error;
};

struct ZeroColumn : Error {
    long long column_index;
    explicit ZeroColumn(long long idx)
        : Error("zero column at index " + std::to_string(idx)), column_index(idx) {}
};

struct SpreadConstructionFailed : Error {
    long long achieved;
    SpreadConstructionFailed(long long want, long long got)
        : Error("could not pack " + std::to_string(want) + " pairwise disjoint spaces, reached " +
                std::to_string(got)),
          achieved(got) {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct InternalInconsistency : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace twc

#endif

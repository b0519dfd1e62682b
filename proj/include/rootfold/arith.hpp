#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootfold {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Lattice coordinates. Arithmetic on these goes through the checked helpers
// below so that an overflow surfaces as an error instead of a wrong answer.
using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using BigMat = std::vector<std::vector<Int>>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A configured cap (enumeration size, word length, 64-bit range) was hit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A mathematical identity that must hold did not.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t to_i64(const Int& x);
std::int64_t to_i64(const Rat& x);  // throws unless x is an integer
}  // namespace checked

IVec vadd(const IVec& a, const IVec& b);
IVec vsub(const IVec& a, const IVec& b);
IVec vscale(std::int64_t c, const IVec& a);
IVec vneg(const IVec& a);
std::int64_t dot(const IVec& a, const IVec& b);
bool is_zero(const IVec& a);

IMat identity_matrix(int n);
IMat zero_matrix(int rows, int cols);
IMat transpose(const IMat& m);
IMat matmul(const IMat& a, const IMat& b);
IVec matvec(const IMat& m, const IVec& v);
// Inverse of a unimodular matrix; throws InputError if not unimodular.
IMat unimodular_inverse(const IMat& m);

QVec to_rat(const IVec& v);
QMat to_rat(const IMat& m);
QVec qadd(const QVec& a, const QVec& b);
QVec qsub(const QVec& a, const QVec& b);
QVec qscale(const Rat& c, const QVec& a);
Rat qdot(const QVec& a, const QVec& b);
QVec qmatvec(const QMat& m, const QVec& v);
QMat qmatmul(const QMat& a, const QMat& b);
QMat qtranspose(const QMat& m);
bool qis_zero(const QVec& a);
std::optional<QMat> qinverse(const QMat& m);
// Some x with a*x = b, or nullopt. a is rows x cols.
std::optional<QVec> qsolve(const QMat& a, const QVec& b);
int qrank(QMat m);
std::optional<IVec> to_integral(const QVec& v);

std::string to_string(const IVec& v);
std::string to_string(const QVec& v);
std::string to_string(const Rat& r);

struct VecHash {
    std::size_t operator()(const IVec& v) const noexcept;
};
struct QVecHash {
    std::size_t operator()(const QVec& v) const noexcept;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace rootfold

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rat_matrix.hpp"
#include "eqg/rational.hpp"

namespace eqg {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

inline constexpr double kModelTol = 1e-9;

struct FiniteAbelianGroup {
    std::vector<int> cyclicOrders; // each >= 2

    int order() const;
    std::vector<int> tuple(int idx) const;
    int indexOf(const std::vector<int>& t) const;
    int add(int a, int b) const;
    int neg(int a) const;
    Cplx coupling(int i, int b) const; // exp(2 pi i sum i_r b_r / N_r)
};

struct HadamardMatrix {
    int N = 0;
    CMat entries;
};

// Throws DomainError unless entries are unimodular with orthogonal rows.
HadamardMatrix makeHadamard(const CMat& entries, double tol = kModelTol);
HadamardMatrix fourierMatrix(const FiniteAbelianGroup& g);
HadamardMatrix cyclicFourier(int n);

std::vector<CMat> weylMatrices(const FiniteAbelianGroup& g); // index (i,a) -> i*n+a

enum class SamplerKind { SU2, HaarUnitary };

struct MagicModel {
    enum class Kind { Point, Weyl, Antidiagonal };
    Kind kind = Kind::Point;
    SamplerKind sampler = SamplerKind::HaarUnitary;
    int N = 0; // magic size
    int K = 0; // block size
    double tol = kModelTol;
    std::vector<CMat> grid;  // point models: N*N blocks, row-major
    FiniteAbelianGroup group; // Weyl models
    int parameterN = 0;       // antidiagonal models: size of the unitary parameter

    const CMat& entry(int i, int j) const { return grid[static_cast<size_t>(i) * static_cast<size_t>(N) + static_cast<size_t>(j)]; }
};

MagicModel hadamardModel(const HadamardMatrix& h);
MagicModel pointModelFromPermutation(const std::vector<int>& perm); // 1x1 blocks
MagicModel weylModel(const FiniteAbelianGroup& g, SamplerKind sampler = SamplerKind::SU2);
// Point model obtained by evaluating a Weyl model at a fixed unitary parameter.
MagicModel weylPointModelAt(const MagicModel& m, const CMat& U);
MagicModel antidiagonalModel(int N); // N <= 4 for exact integration

struct MagicReport {
    bool pass = false;
    double maxProjectionResidual = 0;
    double maxRowResidual = 0;
    double maxColResidual = 0;
};
MagicReport isMagic(const MagicModel& m);
// Evaluates an integrated Weyl model at a fixed unitary parameter.
MagicReport isMagicAt(const MagicModel& m, const CMat& U);

struct CorrelationTensor {
    int p = 0;
    int N = 0;    // index alphabet size; the matrix is N^p x N^p
    CMat entries;
};

enum class HookMode { Exact, MonteCarlo };

CorrelationTensor correlationTensor(const MagicModel& m, int p, HookMode mode = HookMode::Exact,
                                    int samples = 0, std::uint64_t seed = 42);
// Exact rational correlation matrix of the antidiagonal model.
RatMatrix antidiagonalCorrelation(int N, int p);

struct StationarityReport {
    bool pass = false;
    double tol = kModelTol;
    std::vector<double> residuals; // index p-1
};
StationarityReport stationarityCheck(const MagicModel& m, int pmax, double tol = kModelTol,
                                     HookMode mode = HookMode::Exact, int samples = 0,
                                     std::uint64_t seed = 42);

int hopfCharacterMoment(const MagicModel& m, int p, double eigTol = 1e-6);
double cesaroTrace(const CMat& t, int rmax);

CMat haarUnitary(int n, std::mt19937_64& rng);
CMat haarSU2(std::mt19937_64& rng);

} // namespace eqg

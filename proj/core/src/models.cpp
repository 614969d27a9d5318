#include "eqg/models.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <functional>

#include "eqg/weingarten.hpp"

namespace eqg {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEntryCeiling = 1e4; // per-side limit on correlation tensors

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

int FiniteAbelianGroup::order() const {
    int n = 1;
    for (int o : cyclicOrders) {
        if (o < 2) throw DomainError("cyclic orders must be >= 2");
        n *= o;
    }
    return n;
}

std::vector<int> FiniteAbelianGroup::tuple(int idx) const {
    std::vector<int> t(cyclicOrders.size());
    for (size_t r = 0; r < cyclicOrders.size(); ++r) {
        t[r] = idx % cyclicOrders[r];
        idx /= cyclicOrders[r];
    }
    return t;
}

int FiniteAbelianGroup::indexOf(const std::vector<int>& t) const {
    int idx = 0;
    for (size_t r = cyclicOrders.size(); r-- > 0;) {
        int v = ((t[r] % cyclicOrders[r]) + cyclicOrders[r]) % cyclicOrders[r];
        idx = idx * cyclicOrders[r] + v;
    }
    return idx;
}

int FiniteAbelianGroup::add(int a, int b) const {
    auto ta = tuple(a), tb = tuple(b);
    for (size_t r = 0; r < ta.size(); ++r) ta[r] = (ta[r] + tb[r]) % cyclicOrders[r];
    return indexOf(ta);
}

int FiniteAbelianGroup::neg(int a) const {
    auto t = tuple(a);
    for (size_t r = 0; r < t.size(); ++r) t[r] = (cyclicOrders[r] - t[r]) % cyclicOrders[r];
    return indexOf(t);
}

Cplx FiniteAbelianGroup::coupling(int i, int b) const {
    auto ti = tuple(i), tb = tuple(b);
    double phase = 0;
    for (size_t r = 0; r < ti.size(); ++r)
        phase += static_cast<double>(ti[r]) * static_cast<double>(tb[r]) /
                 static_cast<double>(cyclicOrders[r]);
    return std::polar(1.0, 2 * kPi * phase);
}

HadamardMatrix makeHadamard(const CMat& entries, double tol) {
    if (entries.rows() != entries.cols() || entries.rows() == 0)
        throw DomainError("Hadamard matrix must be square and nonempty");
    int N = static_cast<int>(entries.rows());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (std::abs(std::abs(entries(i, j)) - 1.0) > tol)
                throw DomainError("Hadamard entries must have modulus 1");
    for (int i = 0; i < N; ++i)
        for (int k = i + 1; k < N; ++k)
            if (std::abs((entries.row(i) * entries.row(k).adjoint())(0, 0)) > tol * N)
                throw DomainError("Hadamard rows must be pairwise orthogonal");
    return HadamardMatrix{N, entries};
}

HadamardMatrix fourierMatrix(const FiniteAbelianGroup& g) {
    int n = g.order();
    CMat f(n, n);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b) f(i, b) = g.coupling(i, b);
    return makeHadamard(f);
}

HadamardMatrix cyclicFourier(int n) { return fourierMatrix(FiniteAbelianGroup{{n}}); }

std::vector<CMat> weylMatrices(const FiniteAbelianGroup& g) {
    int n = g.order();
    if (n > 16) throw SizeLimitError("Weyl matrices limited to group order 16");
    std::vector<CMat> w(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            CMat m = CMat::Zero(n, n);
            for (int b = 0; b < n; ++b) m(g.add(a, b), b) = g.coupling(i, b);
            w[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(a)] =
                std::move(m);
        }
    return w;
}

MagicModel hadamardModel(const HadamardMatrix& h) {
    MagicModel m;
    m.kind = MagicModel::Kind::Point;
    m.N = h.N;
    m.K = h.N;
    m.grid.reserve(static_cast<size_t>(h.N) * static_cast<size_t>(h.N));
    for (int i = 0; i < h.N; ++i)
        for (int j = 0; j < h.N; ++j) {
            Eigen::VectorXcd v(h.N);
            for (int b = 0; b < h.N; ++b) v(b) = h.entries(i, b) / h.entries(j, b);
            m.grid.push_back(v * v.adjoint() / static_cast<double>(h.N));
        }
    return m;
}

MagicModel pointModelFromPermutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    MagicModel m;
    m.kind = MagicModel::Kind::Point;
    m.N = n;
    m.K = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CMat e(1, 1);
            e(0, 0) = perm[static_cast<size_t>(i)] == j ? 1.0 : 0.0;
            m.grid.push_back(std::move(e));
        }
    return m;
}

MagicModel weylModel(const FiniteAbelianGroup& g, SamplerKind sampler) {
    int n = g.order();
    if (static_cast<long long>(n) * n > 16)
        throw SizeLimitError("Weyl models limited to magic size 16");
    if (sampler == SamplerKind::SU2 && n != 2)
        throw DomainError("the SU(2) sampler needs a parameter space of 2x2 unitaries");
    MagicModel m;
    m.kind = MagicModel::Kind::Weyl;
    m.sampler = sampler;
    m.N = n * n;
    m.K = n * n;
    m.group = g;
    return m;
}

MagicModel weylPointModelAt(const MagicModel& m, const CMat& U) {
    if (m.kind != MagicModel::Kind::Weyl) throw DomainError("not a Weyl model");
    int n = m.group.order();
    if (U.rows() != n || U.cols() != n)
        throw DomainError("parameter unitary has the wrong size");
    auto w = weylMatrices(m.group);
    MagicModel point;
    point.kind = MagicModel::Kind::Point;
    point.N = m.N;
    point.K = m.N;
    for (int r = 0; r < m.N; ++r)
        for (int c = 0; c < m.N; ++c) {
            CMat x = w[static_cast<size_t>(r)] * U * w[static_cast<size_t>(c)].adjoint();
            Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(x.data(), n * n);
            point.grid.push_back(v * v.adjoint() / static_cast<double>(n));
        }
    return point;
}

MagicModel antidiagonalModel(int N) {
    if (N < 1) throw DomainError("antidiagonal model needs N >= 1");
    if (N > 4) throw SizeLimitError("antidiagonal models limited to N <= 4 for exact integration");
    MagicModel m;
    m.kind = MagicModel::Kind::Antidiagonal;
    m.N = N;
    m.K = 2;
    m.parameterN = N;
    return m;
}

namespace {

MagicReport pointMagicReport(const MagicModel& m) {
    MagicReport rep;
    for (int i = 0; i < m.N; ++i)
        for (int j = 0; j < m.N; ++j) {
            const CMat& p = m.entry(i, j);
            rep.maxProjectionResidual =
                std::max({rep.maxProjectionResidual, (p * p - p).cwiseAbs().maxCoeff(),
                          (p - p.adjoint()).cwiseAbs().maxCoeff()});
        }
    CMat id = CMat::Identity(m.K, m.K);
    for (int i = 0; i < m.N; ++i) {
        CMat row = CMat::Zero(m.K, m.K), col = CMat::Zero(m.K, m.K);
        for (int j = 0; j < m.N; ++j) {
            row += m.entry(i, j);
            col += m.entry(j, i);
        }
        rep.maxRowResidual = std::max(rep.maxRowResidual, (row - id).cwiseAbs().maxCoeff());
        rep.maxColResidual = std::max(rep.maxColResidual, (col - id).cwiseAbs().maxCoeff());
    }
    rep.pass = rep.maxProjectionResidual <= m.tol && rep.maxRowResidual <= m.tol &&
               rep.maxColResidual <= m.tol;
    return rep;
}

// Biunitarity of the antidiagonal grid at a fixed unitary parameter v: the
// 2N x 2N block matrix and its transpose are both unitary.
MagicReport antidiagonalReportAt(const MagicModel& m, const CMat& v) {
    int N = m.parameterN;
    CMat big = CMat::Zero(2 * N, 2 * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            big(2 * i, 2 * j + 1) = v(i, j);
            big(2 * i + 1, 2 * j) = std::conj(v(i, j));
        }
    CMat id = CMat::Identity(2 * N, 2 * N);
    MagicReport rep;
    rep.maxRowResidual = (big * big.adjoint() - id).cwiseAbs().maxCoeff();
    CMat bigT = big.transpose();
    rep.maxColResidual = (bigT * bigT.adjoint() - id).cwiseAbs().maxCoeff();
    rep.pass = rep.maxRowResidual <= m.tol && rep.maxColResidual <= m.tol;
    return rep;
}

} // namespace

MagicReport isMagic(const MagicModel& m) {
    if (m.kind != MagicModel::Kind::Point)
        throw DomainError("integrated model: check it at a sampled parameter with isMagicAt");
    return pointMagicReport(m);
}

MagicReport isMagicAt(const MagicModel& m, const CMat& U) {
    switch (m.kind) {
        case MagicModel::Kind::Point: return pointMagicReport(m);
        case MagicModel::Kind::Weyl: return pointMagicReport(weylPointModelAt(m, U));
        case MagicModel::Kind::Antidiagonal: return antidiagonalReportAt(m, U);
    }
    throw DomainError("unreachable model kind");
}

namespace {

CMat pointCorrelation(const MagicModel& m, int p) {
    long long side = ipow(m.N, p);
    CMat t(side, side);
    std::function<void(int, const CMat&, long long, long long)> rec =
        [&](int depth, const CMat& acc, long long row, long long col) {
            if (depth == p) {
                t(row, col) = acc.trace() / static_cast<double>(m.K);
                return;
            }
            for (int i = 0; i < m.N; ++i)
                for (int j = 0; j < m.N; ++j)
                    rec(depth + 1, acc * m.entry(i, j), row * m.N + i, col * m.N + j);
        };
    rec(0, CMat::Identity(m.K, m.K), 0, 0);
    return t;
}

// Each factor tr(U* A_a U B_a) expands as sum_{q r s t} conj(u_{rq}) A_{rs} u_{st} B_{tq};
// the joint u-monomials are integrated exactly over the unitary group of the
// parameter space. For 2x2 parameters a central phase argument makes the same
// values correct for the SU(2)-sampled model.
CMat weylCorrelationExact(const MagicModel& m, int p) {
    int n = m.group.order();
    auto w = weylMatrices(m.group);
    long long packs = ipow(n, 2 * p); // (r_a, s_a) resp. (q_a, t_a) digit strings
    Word word(static_cast<size_t>(2 * p));
    for (int a = 0; a < p; ++a) {
        word[static_cast<size_t>(2 * a)] = Color::Black;
        word[static_cast<size_t>(2 * a + 1)] = Color::White;
    }
    const Family fam{Family::Tag::MatchP2};
    Eigen::MatrixXd table(packs, packs);
    std::vector<int> iv(static_cast<size_t>(2 * p)), jv(static_cast<size_t>(2 * p));
    for (long long ip = 0; ip < packs; ++ip) {
        long long rest = ip;
        for (int pos = 2 * p - 1; pos >= 0; --pos) {
            iv[static_cast<size_t>(pos)] = static_cast<int>(rest % n) + 1;
            rest /= n;
        }
        for (long long jp = 0; jp < packs; ++jp) {
            rest = jp;
            for (int pos = 2 * p - 1; pos >= 0; --pos) {
                jv[static_cast<size_t>(pos)] = static_cast<int>(rest % n) + 1;
                rest /= n;
            }
            table(ip, jp) = static_cast<double>(integrate(fam, n, Monomial{word, iv, jv}));
        }
    }
    long long side = ipow(m.N, p);
    CMat t(side, side);
    std::vector<int> idx(static_cast<size_t>(p)), jdx(static_cast<size_t>(p));
    Eigen::VectorXcd va(packs), vb(packs);
    for (long long row = 0; row < side; ++row) {
        long long rest = row;
        for (int a = p - 1; a >= 0; --a) {
            idx[static_cast<size_t>(a)] = static_cast<int>(rest % m.N);
            rest /= m.N;
        }
        std::vector<CMat> A(static_cast<size_t>(p));
        for (int a = 0; a < p; ++a)
            A[static_cast<size_t>(a)] = w[static_cast<size_t>(idx[static_cast<size_t>(a)])].adjoint() *
                                        w[static_cast<size_t>(idx[static_cast<size_t>((a + 1) % p)])];
        for (long long ip = 0; ip < packs; ++ip) {
            long long digits = ip;
            Cplx prod = 1.0;
            for (int a = p - 1; a >= 0; --a) {
                int s = static_cast<int>(digits % n);
                digits /= n;
                int r = static_cast<int>(digits % n);
                digits /= n;
                prod *= A[static_cast<size_t>(a)](r, s);
            }
            va(ip) = prod;
        }
        for (long long col = 0; col < side; ++col) {
            rest = col;
            for (int a = p - 1; a >= 0; --a) {
                jdx[static_cast<size_t>(a)] = static_cast<int>(rest % m.N);
                rest /= m.N;
            }
            std::vector<CMat> B(static_cast<size_t>(p));
            for (int a = 0; a < p; ++a)
                B[static_cast<size_t>(a)] =
                    w[static_cast<size_t>(jdx[static_cast<size_t>((a + 1) % p)])].adjoint() *
                    w[static_cast<size_t>(jdx[static_cast<size_t>(a)])];
            for (long long jp = 0; jp < packs; ++jp) {
                long long digits = jp;
                Cplx prod = 1.0;
                for (int a = p - 1; a >= 0; --a) {
                    int tdig = static_cast<int>(digits % n);
                    digits /= n;
                    int q = static_cast<int>(digits % n);
                    digits /= n;
                    prod *= B[static_cast<size_t>(a)](tdig, q);
                }
                vb(jp) = prod;
            }
            t(row, col) = (va.transpose() * (table * vb))(0, 0) /
                          (static_cast<double>(m.N) * static_cast<double>(ipow(n, p)));
        }
    }
    return t;
}

CMat weylCorrelationMonteCarlo(const MagicModel& m, int p, int samples, std::uint64_t seed) {
    if (samples <= 0) throw DomainError("Monte Carlo mode needs a positive sample count");
    int n = m.group.order();
    std::mt19937_64 rng(seed);
    long long side = ipow(m.N, p);
    CMat acc = CMat::Zero(side, side);
    for (int s = 0; s < samples; ++s) {
        CMat u = m.sampler == SamplerKind::SU2 ? haarSU2(rng) : haarUnitary(n, rng);
        acc += pointCorrelation(weylPointModelAt(m, u), p);
    }
    return acc / static_cast<double>(samples);
}

} // namespace

RatMatrix antidiagonalCorrelation(int N, int p) {
    long long side = ipow(N, p);
    RatMatrix t(static_cast<int>(side), static_cast<int>(side));
    if (p % 2 == 1) return t;
    Word word(static_cast<size_t>(p));
    for (int a = 0; a < p; ++a)
        word[static_cast<size_t>(a)] = a % 2 == 0 ? Color::White : Color::Black;
    const Family fam{Family::Tag::MatchP2};
    std::vector<int> iv(static_cast<size_t>(p)), jv(static_cast<size_t>(p));
    for (long long row = 0; row < side; ++row) {
        long long rest = row;
        for (int a = p - 1; a >= 0; --a) {
            iv[static_cast<size_t>(a)] = static_cast<int>(rest % N) + 1;
            rest /= N;
        }
        for (long long col = 0; col < side; ++col) {
            rest = col;
            for (int a = p - 1; a >= 0; --a) {
                jv[static_cast<size_t>(a)] = static_cast<int>(rest % N) + 1;
                rest /= N;
            }
            t.at(static_cast<int>(row), static_cast<int>(col)) =
                integrate(fam, N, Monomial{word, iv, jv});
        }
    }
    return t;
}

CorrelationTensor correlationTensor(const MagicModel& m, int p, HookMode mode, int samples,
                                    std::uint64_t seed) {
    if (p < 1) throw DomainError("correlation tensors need p >= 1");
    if (std::pow(static_cast<double>(m.N), p) > kEntryCeiling)
        throw SizeLimitError("correlation tensor exceeds the 10^4 per-side limit");
    CorrelationTensor t;
    t.p = p;
    t.N = m.N;
    switch (m.kind) {
        case MagicModel::Kind::Point: t.entries = pointCorrelation(m, p); break;
        case MagicModel::Kind::Weyl:
            t.entries = mode == HookMode::Exact ? weylCorrelationExact(m, p)
                                                : weylCorrelationMonteCarlo(m, p, samples, seed);
            break;
        case MagicModel::Kind::Antidiagonal: {
            RatMatrix exact = antidiagonalCorrelation(m.parameterN, p);
            t.entries = CMat(exact.rows(), exact.cols());
            for (int r = 0; r < exact.rows(); ++r)
                for (int c = 0; c < exact.cols(); ++c)
                    t.entries(r, c) = static_cast<double>(exact.at(r, c));
            break;
        }
    }
    return t;
}

StationarityReport stationarityCheck(const MagicModel& m, int pmax, double tol, HookMode mode,
                                     int samples, std::uint64_t seed) {
    StationarityReport rep;
    rep.tol = tol;
    rep.pass = true;
    for (int p = 1; p <= pmax; ++p) {
        const CMat& t = correlationTensor(m, p, mode, samples, seed).entries;
        double res = (t * t - t).cwiseAbs().maxCoeff();
        rep.residuals.push_back(res);
        if (res > tol) rep.pass = false;
    }
    return rep;
}

int hopfCharacterMoment(const MagicModel& m, int p, double eigTol) {
    CMat t = correlationTensor(m, p).entries;
    CMat sym = (t + t.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> solver(sym);
    int count = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lambda = solver.eigenvalues()(i);
        if (lambda > 1.0 + eigTol)
            throw DomainError("correlation tensor has spectrum above 1: model invalid");
        if (std::abs(lambda - 1.0) < eigTol) ++count;
    }
    return count;
}

double cesaroTrace(const CMat& t, int rmax) {
    CMat power = t;
    double acc = 0;
    for (int r = 1; r <= rmax; ++r) {
        acc += power.trace().real();
        if (r < rmax) power = power * t;
    }
    return acc / rmax;
}

CMat haarUnitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = Cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMat> qr(z);
    CMat q = qr.householderQ();
    CMat r = qr.matrixQR();
    for (int i = 0; i < n; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

CMat haarSU2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
    double norm = std::sqrt(a * a + b * b + c * c + d * d);
    a /= norm;
    b /= norm;
    c /= norm;
    d /= norm;
    CMat u(2, 2);
    u(0, 0) = Cplx(a, b);
    u(0, 1) = Cplx(c, d);
    u(1, 0) = Cplx(-c, d);
    u(1, 1) = Cplx(a, -b);
    return u;
}

} // namespace eqg

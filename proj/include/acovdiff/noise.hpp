#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acovdiff/rng.hpp"

namespace acovdiff {

enum class Innovation { Gaussian, StudentT4 };

/// Stationary error process of the simulation studies: either the
/// 1-dependent moving average eps_i = r0 d_i + r1 d_{i-1} parameterized by
/// its lag-1 autocorrelation gamma1, or a causal AR(1) eps_i = phi eps_{i-1} + z_i.
class ErrorModel {
  public:
    enum class Kind { Ma1Dependent, Ar1 };

    static ErrorModel ma1(double gamma1, Innovation innovation = Innovation::Gaussian);
    static ErrorModel ar1(double phi);

    Kind kind() const { return kind_; }
    Innovation innovation() const { return innovation_; }
    double gamma1() const { return gamma1_; }
    double phi() const { return phi_; }

    /// Longest lag with nonzero autocovariance; the AR(1) tail decays
    /// geometrically rather than vanishing, so this applies to MA only.
    bool is_m_dependent() const { return kind_ == Kind::Ma1Dependent; }

    std::string describe() const;

  private:
    ErrorModel(Kind kind, Innovation innovation, double gamma1, double phi)
        : kind_(kind), innovation_(innovation), gamma1_(gamma1), phi_(phi) {}

    Kind kind_;
    Innovation innovation_;
    double gamma1_;
    double phi_;
};

struct MaCoefficients {
    double r0;
    double r1;
};

/// r0 = [sqrt(1+2 gamma1) + sqrt(1-2 gamma1)]/2, r1 likewise with a minus.
/// Satisfies r0^2 + r1^2 = 1 and r0 r1 = gamma1. Requires |gamma1| <= 1/2.
MaCoefficients ma_coefficients(double gamma1);

/// True autocovariances gamma_0..gamma_maxlag of the model, in the
/// innovation's natural scale (Gaussian innovations have variance 1,
/// unstandardized t4 innovations have variance 2).
std::vector<double> true_acf(const ErrorModel& model, long maxlag);

/// Reproducible noise source: identical (model, seed, stream, length)
/// always yields the identical sequence, bit for bit, so Monte Carlo
/// replications can be generated independently and in any order.
class NoiseStream {
  public:
    NoiseStream(ErrorModel model, std::uint64_t seed, std::uint64_t stream)
        : model_(model), seed_(seed), stream_(stream) {}

    std::vector<double> generate(long n) const;

    const ErrorModel& model() const { return model_; }

  private:
    ErrorModel model_;
    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace acovdiff

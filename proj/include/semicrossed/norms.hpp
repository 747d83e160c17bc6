#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semicrossed/repr.hpp"

namespace semicrossed {

/// Largest singular value. Banded input goes through a banded bidiagonal
/// reduction; everything else through the Hermitian eigenproblem of M*M.
/// Throws NonFinite.
double spectralNorm(const Matrix& m);

struct TraceRow {
  std::string family;  // "orbit" or "periodic"
  std::string point;
  double parameter = 0.0;  // truncation n, or lambda angle / 2 pi
  double value = 0.0;
};

struct NormEstimate {
  NormBracket bracket;
  std::vector<TraceRow> traces;
  std::string witness;
};

struct Budget {
  int nMax = 256;
  int gridSize = 256;
  int window = 128;
  std::uint64_t seed = 1;
  int proceduralSamples = 32;
  int maxDenominator = 63;
};

/// Periodic rationals p/q with q <= maxDenominator coprime to k (circle),
/// periodic words with cycle length <= 6 (SFT) or every state
/// (permutation), followed by `proceduralSamples` seeded points.
std::vector<Point> defaultSamples(const DynamicalSystem& sys, const Budget& budget);

/// Truncations n = 1, 2, 4, ..., nMax of pi_x(F) for every sample; upper
/// end is the l1 bound.
NormEstimate estimateA(const DynamicalSystem& sys, const Element& f, const std::vector<Point>& points, int nMax);

/// Periodic representations on gridSize equispaced lambdas; the lambda-sup
/// is certified with L = sum |n| sup|f_n|. Non-periodic inputs throw
/// NotPeriodic; cycles are visited once.
NormEstimate estimateB(const DynamicalSystem& sys, const Element& f, const std::vector<Point>& periodicPoints,
                       int gridSize);

NormEstimate semicrossedNorm(const DynamicalSystem& sys, const Element& f, const std::vector<Point>& samples,
                             int nMax, int gridSize);

/// eta_{i+jp} = lambda^{N-j} xi_i / sqrt(N), i = 1..p, j = 0..N-1.
std::vector<cplx> lemma5Vector(const std::vector<cplx>& xi, cplx lambda, int N);

struct Lemma5Result {
  double lhs = 0.0;  // ||pi_y(F) eta|| on the truncation
  double rhs = 0.0;  // ||Pi_{y,lambda}(F) xi||, xi the top right singular vector
  int truncation = 0;
};
Lemma5Result lemma5Check(const DynamicalSystem& sys, const Point& y, cplx lambda, const Element& f, int N);

struct Lemma6Result {
  double bilateral = 0.0;
  double orbitSup = 0.0;
};
/// Window M for the bilateral side; truncation 2M+1 for the orbit side over
/// phi~^{-k} x~, k = 0..2M.
Lemma6Result lemma6Check(const DynamicalSystem& sys, const ExtPoint& xt, const Element& f, int M);

struct Theorem3Result {
  NormEstimate semicrossed;
  NormBracket crossed;
};
Theorem3Result theorem3Check(const DynamicalSystem& sys, const Element& f, const Budget& budget);

}  // namespace semicrossed

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "pburgers/grid.hpp"

namespace pburgers {

using Complex = std::complex<double>;

// Space basis of a field. Both families are orthonormal in L2(0,1):
//   sine:   sqrt(2) sin(m pi x), m = 1..M   (Dirichlet)
//   cosine: 1 for m = 0, sqrt(2) cos(m pi x), m = 1..M   (Neumann)
enum class Basis { kSine, kCosine };

const char* to_string(Basis b);

// Time-Fourier x space-mode coefficient array on a grid. Time modes are the
// orthonormal exponentials e^{2 pi i k t}. Storage is k-outer, m-inner, with
// both signs of k kept explicitly; real fields satisfy c[-k][m] = conj(c[k][m]).
class Coefficients {
 public:
  Coefficients() = default;
  Coefficients(const GridSpec& grid, Basis basis);

  const GridSpec& grid() const { return grid_; }
  Basis basis() const { return basis_; }
  int K() const { return grid_.K; }
  int m_min() const { return basis_ == Basis::kSine ? 1 : 0; }
  int m_max() const { return grid_.M; }
  int num_modes_x() const { return m_max() - m_min() + 1; }
  std::size_t size() const { return coeffs_.size(); }

  Complex& at(int k, int m) { return coeffs_[index(k, m)]; }
  const Complex& at(int k, int m) const { return coeffs_[index(k, m)]; }

  std::span<Complex> data() { return coeffs_; }
  std::span<const Complex> data() const { return coeffs_; }

  // max |c[-k][m] - conj(c[k][m])|.
  double hermitian_defect() const;

  // Overwrites negative-k entries with the conjugates of positive-k entries
  // and zeroes the imaginary part of k = 0.
  void enforce_hermitian();

  bool compatible(const Coefficients& other) const {
    return grid_ == other.grid_ && basis_ == other.basis_;
  }

 protected:
  std::size_t index(int k, int m) const {
    return static_cast<std::size_t>(k + grid_.K) * num_modes_x() +
           static_cast<std::size_t>(m - m_min());
  }

  void add_scaled(const Coefficients& other, double scale);
  void scale(double s);

 private:
  GridSpec grid_{};
  Basis basis_ = Basis::kSine;
  std::vector<Complex> coeffs_;
};

// A real function on T x I (u, v, phi, psi, ...).
class Field : public Coefficients {
 public:
  Field() = default;
  Field(const GridSpec& grid, Basis basis) : Coefficients(grid, basis) {}

  static Field zeros(const GridSpec& grid, Basis basis = Basis::kSine) {
    return Field(grid, basis);
  }

  Field& operator+=(const Field& o);
  Field& operator-=(const Field& o);
  Field& operator*=(double s);
  // this += s * o
  Field& axpy(double s, const Field& o);
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double s, Field a);

// A real linear functional f in H^{0,-1}, stored through its values
// <f, e_{k,m}> against the orthonormal sine x exponential basis. The duality
// bracket with a field v is <f, v> = Re sum_{k,m} f_{k,m} conj(v_{k,m}), so
// for f in L2 the entries coincide with the Fourier coefficients of f.
class DualField : public Coefficients {
 public:
  DualField() = default;
  explicit DualField(const GridSpec& grid) : Coefficients(grid, Basis::kSine) {}

  static DualField zeros(const GridSpec& grid) { return DualField(grid); }

  DualField& operator+=(const DualField& o);
  DualField& operator-=(const DualField& o);
  DualField& operator*=(double s);
  DualField& axpy(double s, const DualField& o);
};

DualField operator+(DualField a, const DualField& b);
DualField operator-(DualField a, const DualField& b);
DualField operator*(double s, DualField a);

// Duality bracket <f, v>; v must be a sine field on the same grid.
double pairing(const DualField& f, const Field& v);

}  // namespace pburgers

#include "pburgers/field.hpp"

#include <algorithm>
#include <cmath>

#include "pburgers/errors.hpp"

namespace pburgers {

const char* to_string(Basis b) {
  return b == Basis::kSine ? "sine" : "cosine";
}

Coefficients::Coefficients(const GridSpec& grid, Basis basis)
    : grid_(grid), basis_(basis) {
  grid_.validate();
  coeffs_.assign(static_cast<std::size_t>(grid_.num_time_modes()) * num_modes_x(),
                 Complex{});
}

double Coefficients::hermitian_defect() const {
  double defect = 0.0;
  for (int k = 0; k <= K(); ++k) {
    for (int m = m_min(); m <= m_max(); ++m) {
      defect = std::max(defect, std::abs(at(-k, m) - std::conj(at(k, m))));
    }
  }
  return defect;
}

void Coefficients::enforce_hermitian() {
  for (int m = m_min(); m <= m_max(); ++m) at(0, m).imag(0.0);
  for (int k = 1; k <= K(); ++k) {
    for (int m = m_min(); m <= m_max(); ++m) at(-k, m) = std::conj(at(k, m));
  }
}

void Coefficients::add_scaled(const Coefficients& other, double s) {
  if (!compatible(other)) {
    throw InputError("coefficient arrays live on different grids or bases");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * other.coeffs_[i];
}

void Coefficients::scale(double s) {
  for (auto& c : coeffs_) c *= s;
}

Field& Field::operator+=(const Field& o) { add_scaled(o, 1.0); return *this; }
Field& Field::operator-=(const Field& o) { add_scaled(o, -1.0); return *this; }
Field& Field::operator*=(double s) { scale(s); return *this; }
Field& Field::axpy(double s, const Field& o) { add_scaled(o, s); return *this; }

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double s, Field a) { return a *= s; }

DualField& DualField::operator+=(const DualField& o) { add_scaled(o, 1.0); return *this; }
DualField& DualField::operator-=(const DualField& o) { add_scaled(o, -1.0); return *this; }
DualField& DualField::operator*=(double s) { scale(s); return *this; }
DualField& DualField::axpy(double s, const DualField& o) { add_scaled(o, s); return *this; }

DualField operator+(DualField a, const DualField& b) { return a += b; }
DualField operator-(DualField a, const DualField& b) { return a -= b; }
DualField operator*(double s, DualField a) { return a *= s; }

double pairing(const DualField& f, const Field& v) {
  if (f.grid() != v.grid() || v.basis() != Basis::kSine) {
    throw InputError("pairing: functional and field must share a sine grid");
  }
  const auto fd = f.data();
  const auto vd = v.data();
  double acc = 0.0;
  for (std::size_t i = 0; i < fd.size(); ++i) acc += (fd[i] * std::conj(vd[i])).real();
  return acc;
}

}  // namespace pburgers

#pragma once

#include <string>

#include "ncalg/matrix.hpp"
#include "ncalg/ncpoly.hpp"
#include "ncalg/parser.hpp"
#include "ncalg/presentation.hpp"
#include "oracles.hpp"

namespace testing {

inline std::string preset(const std::string& name) { return std::string(NCALG_PRESET_DIR) + "/" + name; }

inline ncalg::Presentation irving(const std::string& field = "Q") {
  return ncalg::parse_presentation("field " + field +
                                   "\ngens x y\nrel x*x\nrel y*x*y - x\nwitness x=x y=y z=x*y*x a=y b=y*x\n");
}

inline ncalg::NcPoly poly(const ncalg::AlgebraPtr& alg, const std::string& text) { return ncalg::parse_poly(text, alg); }

// Engine polynomial over Q with one-letter generators -> string oracle form.
inline oracle::SPoly to_spoly(const ncalg::NcPoly& p) {
  oracle::SPoly out;
  for (const auto& [w, c] : p.terms()) {
    std::string s;
    for (auto g : w) s += p.alphabet().name(g);
    out[s] = c.rational();
  }
  return out;
}

inline oracle::F2Matrix to_f2(const ncalg::ExactMatrix& m) {
  oracle::F2Matrix out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out[i] |= 1u << j;
  return out;
}

inline ncalg::ExactMatrix from_f2(const oracle::F2Matrix& bits, std::size_t n) {
  ncalg::ExactMatrix m(ncalg::FieldSpec::prime(2), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (bits[i] >> j & 1) m.at(i, j) = m.field().one();
  return m;
}

}  // namespace testing

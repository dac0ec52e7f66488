#pragma once

#include <stdexcept>
#include <string>

namespace dms {

// The four sequence ensembles handled by the library: the 2-periodic toy
// hull, the random-orientation close-packed dimer shift, its +/- product
// factor, and the sign-randomized Thue-Morse cover.
enum class Model { Toy, DMS, FactorY, TMCover };

inline std::string to_string(Model m) {
  switch (m) {
    case Model::Toy: return "toy";
    case Model::DMS: return "dms";
    case Model::FactorY: return "factory";
    case Model::TMCover: return "tmcover";
  }
  throw std::logic_error("unreachable");
}

inline Model parse_model(const std::string& name) {
  if (name == "toy") return Model::Toy;
  if (name == "dms") return Model::DMS;
  if (name == "factory" || name == "factor-y" || name == "factor_y") return Model::FactorY;
  if (name == "tmcover" || name == "tm-cover" || name == "tm_cover") return Model::TMCover;
  throw std::invalid_argument("unknown model: " + name);
}

}  // namespace dms

#include "fiberlab/presentation/characters.hpp"

#include <algorithm>

#include "fiberlab/error.hpp"

namespace fiberlab {

bool CharacterLess::operator()(const CentralCharacter& a, const CentralCharacter& b) const {
  return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end());
}

std::string label(const CentralShape& shape, const CentralCharacter& chi) {
  if (shape.size() == 0) return "C=k";
  std::string s;
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ", ";
    s += shape.symbols[i].name + "=" + chi.values.at(i).to_string();
  }
  return s;
}

CentralCharacter identity_character(const CentralShape& shape) {
  CentralCharacter chi;
  for (const auto& s : shape.symbols) {
    switch (s.kind) {
      case CentralKind::GroupLikeTorsion:
      case CentralKind::GroupLikeFree:
        chi.values.emplace_back(1);
        break;
      case CentralKind::PrimitiveFree:
        chi.values.emplace_back(0);
        break;
      case CentralKind::Generic:
        throw Error(ErrorKind::MissingCoalgebraData, "central symbol " + s.name + " has no Hopf structure");
    }
  }
  return chi;
}

void check_character(const CentralShape& shape, const CentralCharacter& chi) {
  if (chi.values.size() != shape.size())
    throw Error(ErrorKind::InvalidArgument, "character has the wrong number of values");
  for (size_t i = 0; i < shape.size(); ++i) {
    const auto& s = shape.symbols[i];
    const Scalar& v = chi.values[i];
    if (s.kind == CentralKind::GroupLikeTorsion && v.pow(s.order) != Scalar(1))
      throw Error(ErrorKind::InvalidArgument, s.name + " must map to a root of unity of order " + std::to_string(s.order));
    if (s.kind == CentralKind::GroupLikeFree && v.is_zero())
      throw Error(ErrorKind::InvalidArgument, s.name + " must map to a nonzero value");
  }
}

std::vector<Scalar> default_primitive_samples() {
  return {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar::rational(1, 2)};
}

std::vector<Scalar> default_laurent_samples() { return {Scalar(1), Scalar(-1), Scalar(2)}; }

CharacterSpace characters_of_C(const CentralShape& shape, const std::optional<std::vector<Scalar>>& samples_override) {
  CharacterSpace space;
  space.finite = shape.all_torsion();
  space.primitive_samples = samples_override ? *samples_override : default_primitive_samples();
  if (samples_override) {
    for (const auto& v : *samples_override)
      if (!v.is_zero()) space.laurent_samples.push_back(v);
  } else {
    space.laurent_samples = default_laurent_samples();
  }

  std::vector<std::vector<Scalar>> options;
  for (const auto& s : shape.symbols) {
    std::vector<Scalar> vals;
    switch (s.kind) {
      case CentralKind::GroupLikeTorsion:
        for (int k = 0; k < s.order; ++k) vals.push_back(Scalar::root_of_unity(s.order, k));
        break;
      case CentralKind::GroupLikeFree:
        vals = space.laurent_samples;
        break;
      case CentralKind::PrimitiveFree:
      case CentralKind::Generic:
        vals = space.primitive_samples;
        break;
    }
    options.push_back(std::move(vals));
  }

  // Cartesian product, first symbol varying slowest.
  std::vector<size_t> idx(options.size(), 0);
  bool empty = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
  while (!empty) {
    CentralCharacter chi;
    for (size_t i = 0; i < options.size(); ++i) chi.values.push_back(options[i][idx[i]]);
    space.characters.push_back(std::move(chi));
    size_t i = options.size();
    while (i > 0) {
      --i;
      if (++idx[i] < options[i].size()) break;
      idx[i] = 0;
      if (i == 0) empty = true;
    }
    if (options.empty()) break;
  }

  // Identity first when it is among the points.
  bool has_identity = true;
  for (const auto& s : shape.symbols) has_identity = has_identity && s.kind != CentralKind::Generic;
  if (has_identity) {
    const CentralCharacter id = identity_character(shape);
    auto it = std::find(space.characters.begin(), space.characters.end(), id);
    if (it != space.characters.end()) std::rotate(space.characters.begin(), it, it + 1);
  }
  return space;
}

CentralCharacter convolve(const CentralShape& shape, const CentralCharacter& a, const CentralCharacter& b) {
  check_character(shape, a);
  check_character(shape, b);
  CentralCharacter c;
  for (size_t i = 0; i < shape.size(); ++i) {
    switch (shape.symbols[i].kind) {
      case CentralKind::GroupLikeTorsion:
      case CentralKind::GroupLikeFree:
        c.values.push_back(a.values[i] * b.values[i]);
        break;
      case CentralKind::PrimitiveFree:
        c.values.push_back(a.values[i] + b.values[i]);
        break;
      case CentralKind::Generic:
        throw Error(ErrorKind::MissingCoalgebraData, "central symbol " + shape.symbols[i].name + " has no coproduct");
    }
  }
  return c;
}

CentralCharacter inverse_char(const CentralShape& shape, const CentralCharacter& a) {
  check_character(shape, a);
  CentralCharacter c;
  for (size_t i = 0; i < shape.size(); ++i) {
    switch (shape.symbols[i].kind) {
      case CentralKind::GroupLikeTorsion:
      case CentralKind::GroupLikeFree:
        c.values.push_back(a.values[i].inverse());
        break;
      case CentralKind::PrimitiveFree:
        c.values.push_back(-a.values[i]);
        break;
      case CentralKind::Generic:
        throw Error(ErrorKind::MissingCoalgebraData, "central symbol " + shape.symbols[i].name + " has no antipode");
    }
  }
  return c;
}

std::vector<Scalar> pair_values(const CentralCharacter& left, const CentralCharacter& right) {
  std::vector<Scalar> v = left.values;
  v.insert(v.end(), right.values.begin(), right.values.end());
  return v;
}

}  // namespace fiberlab

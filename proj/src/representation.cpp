#include "dehn/representation.hpp"

#include "dehn/error.hpp"

namespace dehn {

Representation Representation::abelian(int generator_count) {
  Representation r;
  r.kind_ = Kind::Abelian;
  r.dim_ = 1;
  r.images_.assign(generator_count, FieldMatrix::scalar(RatFunc::t()));
  r.inverses_.assign(generator_count, FieldMatrix::scalar(RatFunc::t_pow(-1)));
  return r;
}

Representation Representation::trivial(int generator_count, int dim) {
  Representation r;
  r.kind_ = Kind::Matrix;
  r.dim_ = dim;
  r.images_.assign(generator_count, FieldMatrix::identity(dim));
  r.inverses_ = r.images_;
  return r;
}

Representation Representation::matrix(std::vector<FieldMatrix> images, const WirtingerPresentation& presentation) {
  if (static_cast<int>(images.size()) != presentation.generator_count)
    throw Error(ErrorKind::InvalidRepresentation, "one image per generator required");
  if (images.empty()) throw Error(ErrorKind::InvalidRepresentation, "no generators");
  Representation r;
  r.kind_ = Kind::Matrix;
  r.dim_ = static_cast<int>(images[0].rows());
  for (const auto& m : images) {
    if (!m.is_square() || static_cast<int>(m.rows()) != r.dim_ || r.dim_ == 0)
      throw Error(ErrorKind::InvalidRepresentation, "images must be square of a common size");
    if (matrix_det(m).is_zero()) throw Error(ErrorKind::InvalidRepresentation, "generator image is singular");
    r.inverses_.push_back(matrix_inverse(m));
  }
  r.images_ = std::move(images);
  const FieldMatrix id = FieldMatrix::identity(r.dim_);
  for (std::size_t i = 0; i < presentation.relators.size(); ++i)
    if (!(r.eval(presentation.relators[i]) == id))
      throw Error(ErrorKind::InvalidRepresentation,
                  "Wirtinger relation at crossing " + std::to_string(i) + " is not satisfied");
  return r;
}

FieldMatrix Representation::eval(const Word& w) const {
  for (const auto& l : w.letters())
    if (l.generator < 0 || l.generator >= generator_count())
      throw Error(ErrorKind::InvalidRepresentation, "generator " + std::to_string(l.generator) + " out of range");
  if (kind_ == Kind::Abelian) return FieldMatrix::scalar(RatFunc::t_pow(w.exponent_sum()));
  FieldMatrix acc = FieldMatrix::identity(dim_);
  for (const auto& l : w.letters()) acc = (l.exponent > 0 ? images_[l.generator] : inverses_[l.generator]) * acc;
  return acc;
}

FieldMatrix Representation::eval(const GroupRingTerm& term) const {
  FieldMatrix m = eval(term.word);
  return term.sign > 0 ? m : RatFunc(-1) * m;
}

}  // namespace dehn

#pragma once

#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/matrix.hpp"
#include "dehn/word.hpp"

namespace dehn {

// A representation of the knot group on Q(t)^dim, given by the images of the
// Wirtinger generators.
//
// Matrix images act on the right: a word g1 g2 ... gn evaluates to
// img(gn) ... img(g1). With that convention the boundary blocks compose in
// the same order as the corner and region labels, so d1 * d2 = 0 holds for
// non-abelian images too. For the abelian case the order is irrelevant.
class Representation {
 public:
  enum class Kind { Abelian, Matrix };

  // Every generator acts as multiplication by t.
  static Representation abelian(int generator_count);
  // Throws Error(InvalidRepresentation) if an image is not square of size
  // dim, is singular, or some relator does not evaluate to the identity.
  static Representation matrix(std::vector<FieldMatrix> images, const WirtingerPresentation& presentation);
  // Every generator acts as the identity of Q(t)^dim.
  static Representation trivial(int generator_count, int dim = 1);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int generator_count() const { return static_cast<int>(images_.size()); }
  const FieldMatrix& image(int g) const { return images_.at(g); }

  FieldMatrix eval(const Word& w) const;
  // sign * eval(word)
  FieldMatrix eval(const GroupRingTerm& term) const;

 private:
  Representation() = default;
  Kind kind_ = Kind::Abelian;
  int dim_ = 1;
  std::vector<FieldMatrix> images_;
  std::vector<FieldMatrix> inverses_;
};

inline FieldMatrix eval_rep(const Representation& rep, const GroupRingTerm& term) { return rep.eval(term); }

}  // namespace dehn

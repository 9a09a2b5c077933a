#include <algorithm>

#include "cremona/errors.hpp"
#include "cremona/lifted_map.hpp"
#include "cremona/pic.hpp"
#include "cremona/resolution.hpp"

namespace cremona {

std::vector<SurfaceCurve> exceptional_lifted(const LiftedMap& F) {
  SmoothGraph G = resolve(F);
  LatticeHom push = morphism_pushforward(G.beta);

  std::vector<SurfaceCurve> candidates;
  for (int i = 0; i < F.domain.depth(); ++i)
    candidates.push_back(SurfaceCurve::exceptional(i));
  for (const ContractedCurve& c : exceptional_curves(F.base))
    candidates.push_back(SurfaceCurve::proper(c.curve));

  std::vector<SurfaceCurve> out;
  for (const SurfaceCurve& C : candidates) {
    // The strict transform of C in sigma carries the same description, and
    // its class there pushes forward to the class of the image of C.
    PicClass cls = class_of_curve(G.sigma, C);
    bool contracted = push.apply(cls) == zero_class(F.codomain);

    std::vector<SurfacePoint> samples =
        sample_on_surface_curve(F.domain, C, 6, {});
    std::vector<SurfacePoint> images;
    for (const SurfacePoint& p : samples) {
      try {
        images.push_back(evaluate_lifted(F, p));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IndeterminateAt) throw;
      }
    }
    if (images.size() >= 2) {
      bool single = true;
      for (const SurfacePoint& q : images)
        if (q != images.front()) single = false;
      require_internal(contracted == single,
                       "class and sampling disagree on a contracted curve");
    }
    if (contracted) out.push_back(C);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TransformPiece> total_transform(const LiftedMap& F,
                                            const SurfacePoint& p,
                                            int jet_cap) {
  F.domain.validate_point(p);
  try {
    return {TransformPiece{evaluate_lifted(F, p, jet_cap)}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IndeterminateAt) throw;
  }

  // p is indeterminate: push every exceptional component over p through the
  // resolved morphism.
  SmoothGraph G = resolve(F);
  std::vector<TransformPiece> out;
  for (int i = F.domain.depth(); i < G.sigma.depth(); ++i) {
    const SurfacePoint& w = G.sigma.centers()[i];
    bool over_p = w.base == p.base && w.chain.size() >= p.chain.size() &&
                  std::equal(p.chain.begin(), p.chain.end(), w.chain.begin());
    if (!over_p) continue;
    std::variant<SurfacePoint, SurfaceCurve> im =
        morphism_image(G.beta, SurfaceCurve::exceptional(i));
    if (std::holds_alternative<SurfacePoint>(im))
      out.push_back(TransformPiece{std::get<SurfacePoint>(im)});
    else
      out.push_back(TransformPiece{std::get<SurfaceCurve>(im)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  require_internal(!out.empty(),
                   "no exceptional component over an indeterminate point");
  return out;
}

}  // namespace cremona

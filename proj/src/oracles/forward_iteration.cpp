#include "eggbeater/oracles/forward_iteration.hpp"

#include "eggbeater/shear.hpp"

namespace eggbeater::oracles {

ForwardOrbit forward_iterate(const PlanePoint& z0, const BalancedWord& w, const ModelParams& params) {
  params.validate();
  const SmoothingProfile u = SmoothingProfile::for_params(params);
  ForwardOrbit orbit;
  orbit.points.push_back(z0);
  try {
    for (std::size_t j = 0; j < w.r(); ++j) {
      // V^{N_j}: shear in C_V, return to the fundamental domain, cross into H coordinates.
      PlanePoint p = orbit.points.back();
      const std::int64_t mv = params.k * w.N[j];
      const std::int64_t nv = trace_winding(p, mv, params.L, u);
      orbit.windings.push_back(nv);
      orbit.points.push_back(plane_VH(deck_translate(shear_lift_power(p, mv, params.L, u), nv, params.L)));

      p = orbit.points.back();
      const std::int64_t mh = params.k * w.M[j];
      const std::int64_t nh = trace_winding(p, mh, params.L, u);
      orbit.windings.push_back(nh);
      orbit.points.push_back(plane_HV(deck_translate(shear_lift_power(p, mh, params.L, u), nh, params.L)));
    }
  } catch (const Error& e) {
    orbit.error = e.what();
  }
  return orbit;
}

HomotopyWord traced_class(const ForwardOrbit& orbit) {
  std::vector<HomotopySyllable> raw;
  for (std::size_t i = 0; i < orbit.windings.size(); ++i)
    raw.push_back({i % 2 == 0 ? Generator::a : Generator::b, orbit.windings[i]});
  return HomotopyWord::reduce(raw);
}

ForwardCheck check_record(const FixedPointRecord& record, const BalancedWord& w, const ModelParams& params) {
  ForwardCheck out;
  const ForwardOrbit orbit = forward_iterate(record.z0(), w, params);
  out.error = orbit.error;
  if (orbit.error) return out;
  out.closure = orbit.points.back() == record.z0();
  out.intermediates_match = orbit.points.size() == record.points.size() + 1;
  for (std::size_t i = 0; out.intermediates_match && i < record.points.size(); ++i)
    out.intermediates_match = orbit.points[i] == record.points[i];
  out.class_matches = traced_class(orbit) == compatible_class(w, params.k);
  return out;
}

}  // namespace eggbeater::oracles

#include "sixtermk/functors.hpp"

#include <stdexcept>

namespace sixtermk {

SixTermSeq mc_data(const SixTermSeq& s) {
  SixTermSeq out;
  for (std::size_t i = 0; i < 6; ++i) {
    out.groups[i] = s.groups[(i + 5) % 6];
    out.maps[i] = s.maps[(i + 5) % 6];
  }
  out.maps[0] = negate(out.maps[0]);  // was m5
  out.maps[2] = negate(out.maps[2]);  // was m1
  out.verified_exact = s.verified_exact;
  return out;
}

SixTermSeq mc_iter(const SixTermSeq& s, long k) {
  if (k < 0) throw std::invalid_argument("mc_iter: negative iteration count");
  SixTermSeq out = s;
  for (long i = 0; i < k; ++i) out = mc_data(out);
  return out;
}

SixTermHom x_e_iso(const SixTermSeq& s) {
  static const int signs[6] = {+1, -1, +1, +1, -1, +1};
  SixTermSeq src = rotate3(s);
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i) {
    GroupHom id = GroupHom::identity(src.groups[i]);
    out.components[i] = signs[i] == 1 ? id : negate(id);
  }
  return out;
}

SixTermHom lambda_transform(const SixTermHom& a, const SixTermSeq& s,
                            const SixTermSeq& t) {
  if (!a.commutes(s, t))
    throw std::invalid_argument(
        "lambda_transform: input violates the commuting condition");
  SixTermHom out;
  for (std::size_t i = 0; i < 6; ++i)
    out.components[i] = a.components[(i + 5) % 6];
  return out;
}

}  // namespace sixtermk

#include "sixtermk/catalog.hpp"

#include <stdexcept>

namespace sixtermk {

namespace {

long mod6(long i) {
  long r = i % 6;
  return r < 0 ? r + 6 : r;
}

SixTermSeq base_E(const Int& n) {
  // SM_n >-> C_n ->> C at K-level: groups (0, 0, Z, Z, Z/n, 0),
  // exponential map x n, then reduction.
  SixTermSeq s;
  FinAbGroup zero = FinAbGroup::zero();
  FinAbGroup Z = FinAbGroup::free_group(1);
  FinAbGroup Zn = FinAbGroup::cyclic(n);
  s.groups = {zero, zero, Z, Z, Zn, zero};
  s.maps[0] = GroupHom::zero(zero, zero);
  s.maps[1] = GroupHom::zero(zero, Z);
  s.maps[2] = GroupHom(Z, Z, IntMatrix(1, 1, {n}));
  s.maps[3] = GroupHom(Z, Zn, IntMatrix(1, 1, {1}));
  s.maps[4] = GroupHom::zero(Zn, zero);
  s.maps[5] = GroupHom::zero(zero, zero);
  s.verified_exact = true;
  return s;
}

SixTermSeq base_F1() {
  SixTermSeq s;
  FinAbGroup zero = FinAbGroup::zero();
  FinAbGroup Z = FinAbGroup::free_group(1);
  s.groups = {Z, Z, zero, zero, zero, zero};
  s.maps[0] = GroupHom::identity(Z);
  s.maps[1] = GroupHom::zero(Z, zero);
  s.maps[2] = GroupHom::zero(zero, zero);
  s.maps[3] = GroupHom::zero(zero, zero);
  s.maps[4] = GroupHom::zero(zero, zero);
  s.maps[5] = GroupHom::zero(zero, Z);
  s.verified_exact = true;
  return s;
}

SixTermSeq base_F(const Int& n) {
  SixTermSeq s;
  FinAbGroup zero = FinAbGroup::zero();
  FinAbGroup Zn = FinAbGroup::cyclic(n);
  s.groups = {zero, zero, zero, Zn, Zn, zero};
  for (std::size_t i = 0; i < 3; ++i)
    s.maps[i] = GroupHom::zero(zero, i == 2 ? Zn : zero);
  s.maps[2] = GroupHom::zero(zero, Zn);
  s.maps[3] = GroupHom::identity(Zn);
  s.maps[4] = GroupHom::zero(Zn, zero);
  s.maps[5] = GroupHom::zero(zero, zero);
  s.verified_exact = true;
  return s;
}

}  // namespace

ExtensionDescriptor ExtensionDescriptor::E(const Int& n, long i) {
  ExtensionDescriptor d;
  d.kind = Kind::E;
  d.n = n;
  d.i = mod6(i);
  return d;
}

ExtensionDescriptor ExtensionDescriptor::F(const Int& n, long i) {
  ExtensionDescriptor d;
  d.kind = Kind::F;
  d.n = n;
  d.i = mod6(i);
  return d;
}

ExtensionDescriptor ExtensionDescriptor::F1(long i) {
  ExtensionDescriptor d;
  d.kind = Kind::F1;
  d.i = mod6(i);
  return d;
}

ExtensionDescriptor ExtensionDescriptor::trivial_ideal(const SixTermSeq& e) {
  ExtensionDescriptor d;
  d.kind = Kind::TrivialIdeal;
  d.custom = e;
  return d;
}

ExtensionDescriptor ExtensionDescriptor::trivial_quotient(const SixTermSeq& e) {
  ExtensionDescriptor d;
  d.kind = Kind::TrivialQuotient;
  d.custom = e;
  return d;
}

ExtensionDescriptor ExtensionDescriptor::custom_seq(const SixTermSeq& e,
                                                    std::string path) {
  ExtensionDescriptor d;
  d.kind = Kind::Custom;
  d.custom = e;
  d.path = std::move(path);
  return d;
}

SixTermSeq build(const ExtensionDescriptor& desc) {
  switch (desc.kind) {
    case ExtensionDescriptor::Kind::E:
      if (desc.n < 2)
        throw std::invalid_argument("catalog: E family needs n >= 2");
      return mc_iter(base_E(desc.n), mod6(desc.i));
    case ExtensionDescriptor::Kind::F:
      if (desc.n < 2)
        throw std::invalid_argument("catalog: F family needs n >= 2");
      return mc_iter(base_F(desc.n), mod6(desc.i));
    case ExtensionDescriptor::Kind::F1:
      return mc_iter(base_F1(), mod6(desc.i));
    case ExtensionDescriptor::Kind::TrivialIdeal: {
      const SixTermSeq& e = desc.custom;
      SixTermSeq s;
      FinAbGroup zero = FinAbGroup::zero();
      s.groups = {e.groups[0], e.groups[0], zero,
                  e.groups[3], e.groups[3], zero};
      s.maps[0] = GroupHom::identity(e.groups[0]);
      s.maps[1] = GroupHom::zero(e.groups[0], zero);
      s.maps[2] = GroupHom::zero(zero, e.groups[3]);
      s.maps[3] = GroupHom::identity(e.groups[3]);
      s.maps[4] = GroupHom::zero(e.groups[3], zero);
      s.maps[5] = GroupHom::zero(zero, e.groups[0]);
      s.verified_exact = true;
      return s;
    }
    case ExtensionDescriptor::Kind::TrivialQuotient: {
      const SixTermSeq& e = desc.custom;
      SixTermSeq s;
      FinAbGroup zero = FinAbGroup::zero();
      s.groups = {zero, e.groups[2], e.groups[2],
                  zero, e.groups[5], e.groups[5]};
      s.maps[0] = GroupHom::zero(zero, e.groups[2]);
      s.maps[1] = GroupHom::identity(e.groups[2]);
      s.maps[2] = GroupHom::zero(e.groups[2], zero);
      s.maps[3] = GroupHom::zero(zero, e.groups[5]);
      s.maps[4] = GroupHom::identity(e.groups[5]);
      s.maps[5] = GroupHom::zero(e.groups[5], zero);
      s.verified_exact = true;
      return s;
    }
    case ExtensionDescriptor::Kind::Custom:
      return desc.custom;
  }
  throw std::invalid_argument("catalog: malformed descriptor");
}

KGroupPairs k_groups_of(const ExtensionDescriptor& desc) {
  SixTermSeq s = build(desc);
  return {{s.groups[0], s.groups[3]},
          {s.groups[1], s.groups[4]},
          {s.groups[2], s.groups[5]}};
}

ExtensionDescriptor parse_descriptor(const std::string& text) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ':') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  if (text.rfind("file:", 0) == 0) {
    ExtensionDescriptor d;
    d.kind = ExtensionDescriptor::Kind::Custom;
    d.path = text.substr(5);
    return d;
  }
  std::vector<std::string> parts = split(text);
  try {
    if (parts.size() == 3 && parts[0] == "E")
      return ExtensionDescriptor::E(Int(parts[1]), std::stol(parts[2]));
    if (parts.size() == 3 && parts[0] == "F")
      return ExtensionDescriptor::F(Int(parts[1]), std::stol(parts[2]));
    if (parts.size() == 2 && parts[0] == "F1")
      return ExtensionDescriptor::F1(std::stol(parts[1]));
  } catch (const std::exception&) {
    throw std::invalid_argument("descriptor: bad parameters in '" + text + "'");
  }
  throw std::invalid_argument("descriptor: unrecognized '" + text + "'");
}

std::string format_descriptor(const ExtensionDescriptor& desc) {
  switch (desc.kind) {
    case ExtensionDescriptor::Kind::E:
      return "E:" + desc.n.str() + ":" + std::to_string(desc.i);
    case ExtensionDescriptor::Kind::F:
      return "F:" + desc.n.str() + ":" + std::to_string(desc.i);
    case ExtensionDescriptor::Kind::F1:
      return "F1:" + std::to_string(desc.i);
    case ExtensionDescriptor::Kind::TrivialIdeal:
      return "trivial-ideal";
    case ExtensionDescriptor::Kind::TrivialQuotient:
      return "trivial-quotient";
    case ExtensionDescriptor::Kind::Custom:
      return desc.path.empty() ? "custom" : "file:" + desc.path;
  }
  return "?";
}

}  // namespace sixtermk

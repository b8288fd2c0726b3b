#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sixtermk/functors.hpp"
#include "sixtermk/json_io.hpp"
#include "sixtermk/literal.hpp"
#include "sixtermk/solver.hpp"

using namespace sixtermk;

namespace {

constexpr int kOk = 0, kVerifyFail = 1, kInputError = 2, kContradiction = 3;

std::string matrix_text(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "[]";
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += m.at(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

struct NamedSeq {
  std::string label;
  SixTermSeq seq;
};

NamedSeq load_sequence(const std::string& text) {
  ExtensionDescriptor d = parse_descriptor(text);
  if (d.kind != ExtensionDescriptor::Kind::Custom) return {text, build(d)};
  Json j;
  if (d.path == "-") {
    j = Json::parse(std::cin);
  } else {
    std::ifstream in(d.path);
    if (!in) throw std::invalid_argument("cannot open '" + d.path + "'");
    j = Json::parse(in);
  }
  std::string label = j.value("descriptor", text);
  return {label, seq_from_json(j)};
}

ExtensionDescriptor load_descriptor(const std::string& text) {
  ExtensionDescriptor d = parse_descriptor(text);
  if (d.kind == ExtensionDescriptor::Kind::Custom) {
    NamedSeq s = load_sequence(text);
    d.custom = s.seq;
  }
  return d;
}

std::vector<Int> parse_moduli(const std::string& mods) {
  std::string text = mods;
  if (text.empty()) {
    if (const char* env = std::getenv("SIXTERMK_MODULI")) text = env;
  }
  if (text.empty()) text = "2";
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    out.push_back(Int(part));
  }
  if (out.empty()) throw std::invalid_argument("empty moduli list");
  return out;
}

void print_sequence(const std::string& label, const SixTermSeq& s,
                    const std::string& format) {
  if (format == "json") {
    Json j = seq_to_json(s);
    j["descriptor"] = label;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "descriptor: " << label << "\n";
  for (std::size_t i = 0; i < 6; ++i)
    std::cout << "p" << i << " = " << format_group(s.groups[i]) << "\n";
  for (std::size_t i = 0; i < 6; ++i)
    std::cout << "m" << i << " = " << matrix_text(s.maps[i].matrix) << " : "
              << format_group(s.maps[i].source) << " -> "
              << format_group(s.maps[i].target) << "\n";
  SixTermSeq copy = s;
  std::cout << "exact: " << (verify_and_mark(copy) ? "yes" : "no") << "\n";
}

void print_invariant(const IdealKInvariant& inv, const std::string& format) {
  if (format == "json") {
    std::cout << invariant_to_json(inv).dump(2) << "\n";
    return;
  }
  std::cout << "descriptor: " << format_descriptor(inv.desc) << "\nbase:";
  for (std::size_t i = 0; i < 6; ++i)
    std::cout << "  " << format_group(inv.base.groups[i]);
  std::cout << "\n";
  for (const auto& l : inv.layers) {
    std::cout << "n=" << l.n.str() << " F:";
    for (std::size_t i = 0; i < 6; ++i)
      std::cout << "  " << format_group(l.coeff.slots[i].total);
    std::cout << "\n";
    std::cout << "n=" << l.n.str() << " H:";
    for (std::size_t i = 0; i < 6; ++i)
      std::cout << "  " << (l.H[i] ? format_group(*l.H[i]) : std::string("?"));
    std::cout << "\n";
    if (!l.coeff.warning.empty())
      std::cout << "warning: " << l.coeff.warning << "\n";
  }
}

int cmd_table(long long n, long long k, const std::string& format) {
  std::vector<std::array<std::string, 6>> f1(6), fk(6), h(6);
  std::vector<std::string> col_labels;
  for (std::size_t j = 0; j < 6; ++j) {
    col_labels.push_back("e^" + std::to_string(j));
    IdealKInvariant inv = compute_invariant(ExtensionDescriptor::E(n, (long)j),
                                            {Int(k)});
    HLayerReport rep = solve_H_layer(inv);
    if (rep.contradiction) return kContradiction;
    const ModulusLayer& l = inv.layers[0];
    for (std::size_t i = 0; i < 6; ++i) {
      f1[i][j] = format_group(inv.base.groups[i]);
      fk[i][j] = format_group(l.coeff.slots[i].total);
      h[i][j] = l.H[i] ? format_group(*l.H[i]) : "?";
    }
  }
  if (format == "json") {
    Json out{{"n", n}, {"k", k}};
    auto rows = [&](const std::vector<std::array<std::string, 6>>& m) {
      Json a = Json::array();
      for (const auto& row : m) a.push_back(row);
      return a;
    };
    out["F1"] = rows(f1);
    out["Fk"] = rows(fk);
    out["H"] = rows(h);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::string> row_labels;
  std::vector<std::array<std::string, 6>*> rows;
  for (std::size_t i = 0; i < 6; ++i) {
    row_labels.push_back("F1_" + std::to_string(i));
    rows.push_back(&f1[i]);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    row_labels.push_back("Fk_" + std::to_string(i));
    rows.push_back(&fk[i]);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    row_labels.push_back("H_" + std::to_string(i));
    rows.push_back(&h[i]);
  }
  std::array<std::size_t, 7> width{};
  for (const auto& rl : row_labels) width[0] = std::max(width[0], rl.size());
  for (std::size_t j = 0; j < 6; ++j) {
    width[j + 1] = col_labels[j].size();
    for (auto* row : rows) width[j + 1] = std::max(width[j + 1], (*row)[j].size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::cout << "table n=" << n << " k=" << k << "\n";
  std::cout << pad("", width[0]);
  for (std::size_t j = 0; j < 6; ++j)
    std::cout << "  " << pad(col_labels[j], width[j + 1]);
  std::cout << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::cout << pad(row_labels[r], width[0]);
    for (std::size_t j = 0; j < 6; ++j)
      std::cout << "  " << pad((*rows[r])[j], width[j + 1]);
    std::cout << "\n";
  }
  return kOk;
}

// Resolve H and (if needed) h maps so the requested templates can verify.
bool populate(IdealKInvariant& inv, bool need_witness, long bound,
              const DeduceOptions& opt, bool& contradiction) {
  HLayerReport rep = solve_H_layer(inv, opt);
  if (rep.contradiction) {
    contradiction = true;
    return false;
  }
  if (!need_witness) return true;
  bool ok = true;
  for (const auto& l : inv.layers) {
    bool have_h = true;
    for (std::size_t i = 0; i < 6; ++i)
      if (!l.H[i]) have_h = false;
    if (!have_h || !witness_search_layer(inv, l.n, bound)) ok = false;
  }
  return ok;
}

bool needs_witness(const std::vector<TemplateId>& ids) {
  for (TemplateId id : ids)
    switch (id) {
      case TemplateId::SEQ1:
      case TemplateId::SEQ4:
      case TemplateId::D0:
      case TemplateId::CORSQ:
        break;
      default:
        return true;
    }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-term exact sequence invariants with coefficients"};
  app.require_subcommand(1);

  std::string desc_text, desc_text2, mods_text, format = "text",
                                                diagrams_text;
  long long n_flag = 2, k_flag = 2, times = 1, bound = 6;
  long long max_order = 1000000;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* c_describe = app.add_subcommand("describe", "print K-group data");
  c_describe->add_option("descriptor", desc_text)->required();
  add_format(c_describe);

  CLI::App* c_mc = app.add_subcommand("mc", "apply the mapping-cone rotation");
  c_mc->add_option("descriptor", desc_text)->required();
  c_mc->add_option("--times", times);
  add_format(c_mc);

  CLI::App* c_susp = app.add_subcommand("suspend", "rotate by three");
  c_susp->add_option("descriptor", desc_text)->required();
  add_format(c_susp);

  CLI::App* c_inv = app.add_subcommand("invariant", "compute coefficient layers");
  c_inv->add_option("descriptor", desc_text)->required();
  c_inv->add_option("--mods", mods_text);
  add_format(c_inv);

  CLI::App* c_solve = app.add_subcommand("solve", "deduce H layers");
  c_solve->add_option("descriptor", desc_text)->required();
  c_solve->add_option("--mods", mods_text);
  c_solve->add_option("--max-order", max_order);
  add_format(c_solve);

  CLI::App* c_verify = app.add_subcommand("verify", "check diagram templates");
  c_verify->add_option("descriptor", desc_text)->required();
  c_verify->add_option("--mods", mods_text);
  c_verify->add_option("--diagrams", diagrams_text);
  c_verify->add_option("--bound", bound);
  c_verify->add_option("--max-order", max_order);
  add_format(c_verify);

  CLI::App* c_hom6 = app.add_subcommand("hom-six", "chain-map group of two sequences");
  c_hom6->add_option("a", desc_text)->required();
  c_hom6->add_option("b", desc_text2)->required();
  add_format(c_hom6);

  CLI::App* c_hom = app.add_subcommand("hom", "structure-compatible hom group");
  c_hom->add_option("a", desc_text)->required();
  c_hom->add_option("b", desc_text2)->required();
  c_hom->add_option("--mods", mods_text);
  c_hom->add_option("--bound", bound);
  c_hom->add_option("--max-order", max_order);
  add_format(c_hom);

  CLI::App* c_table = app.add_subcommand("table", "emit the K-with-coefficients table");
  c_table->add_option("--n", n_flag)->required();
  c_table->add_option("--k", k_flag)->required();
  add_format(c_table);

  CLI11_PARSE(app, argc, argv);

  try {
    DeduceOptions opt;
    opt.max_order = max_order;

    if (*c_describe) {
      NamedSeq s = load_sequence(desc_text);
      print_sequence(s.label, s.seq, format);
      return kOk;
    }
    if (*c_mc) {
      NamedSeq s = load_sequence(desc_text);
      long t = ((times % 6) + 6) % 6;
      print_sequence(s.label, mc_iter(s.seq, t), format);
      return kOk;
    }
    if (*c_susp) {
      NamedSeq s = load_sequence(desc_text);
      print_sequence(s.label, rotate3(s.seq), format);
      return kOk;
    }
    if (*c_inv) {
      IdealKInvariant inv =
          compute_invariant(load_descriptor(desc_text), parse_moduli(mods_text));
      print_invariant(inv, format);
      return kOk;
    }
    if (*c_solve) {
      IdealKInvariant inv =
          compute_invariant(load_descriptor(desc_text), parse_moduli(mods_text));
      HLayerReport rep = solve_H_layer(inv, opt);
      if (format == "json") {
        Json j = invariant_to_json(inv);
        j["resolution"] = h_layer_report_to_json(rep);
        std::cout << j.dump(2) << "\n";
      } else {
        print_invariant(inv, format);
        for (const auto& s : rep.slots)
          for (const auto& p : s.res.provenance) std::cout << p << "\n";
      }
      return rep.contradiction ? kContradiction : kOk;
    }
    if (*c_verify) {
      std::vector<TemplateId> ids;
      if (diagrams_text.empty()) {
        ids = all_template_ids();
      } else {
        std::stringstream ss(diagrams_text);
        std::string part;
        while (std::getline(ss, part, ',')) {
          auto id = parse_template_id(part);
          if (!id)
            throw std::invalid_argument("unknown template '" + part + "'");
          ids.push_back(*id);
        }
      }
      IdealKInvariant inv =
          compute_invariant(load_descriptor(desc_text), parse_moduli(mods_text));
      bool contradiction = false;
      populate(inv, needs_witness(ids), bound, opt, contradiction);
      if (contradiction) return kContradiction;
      std::vector<DiagramReport> reps = verify_diagrams(inv, ids);
      bool failed = false;
      if (format == "json") {
        std::cout << reports_to_json(reps).dump(2) << "\n";
        for (const auto& r : reps) failed = failed || r.any_failed();
      } else {
        for (const auto& r : reps) {
          int pass = 0, fail = 0, skip = 0;
          for (const auto& c : r.cells) {
            if (c.status == CellVerdict::FAIL) {
              ++fail;
              std::cout << "FAIL " << c.name << "\n";
            } else if (c.status == CellVerdict::SKIP) {
              ++skip;
              std::cout << "SKIP " << c.name << "\n";
            } else {
              ++pass;
            }
          }
          std::cout << format_template_id(r.id) << ": pass=" << pass
                    << " fail=" << fail << " skip=" << skip << "\n";
          failed = failed || fail > 0;
        }
      }
      return failed ? kVerifyFail : kOk;
    }
    if (*c_hom6) {
      NamedSeq a = load_sequence(desc_text);
      NamedSeq b = load_sequence(desc_text2);
      HomSixResult r = hom_six(a.seq, b.seq);
      if (format == "json") {
        std::cout << Json{{"group", format_group(r.group)}}.dump(2) << "\n";
      } else {
        std::cout << "Hom_six(" << a.label << ", " << b.label
                  << ") = " << format_group(r.group) << "\n";
      }
      return kOk;
    }
    if (*c_hom) {
      std::vector<Int> mods = parse_moduli(mods_text);
      IdealKInvariant a = compute_invariant(load_descriptor(desc_text), mods);
      IdealKInvariant b = compute_invariant(load_descriptor(desc_text2), mods);
      bool contradiction = false;
      bool oka = populate(a, true, bound, opt, contradiction);
      bool okb = populate(b, true, bound, opt, contradiction);
      if (contradiction) return kContradiction;
      if (!oka || !okb) {
        std::cerr << "could not populate H layers within bound\n";
        return kVerifyFail;
      }
      HomLambdaResult r = hom_lambda(a, b);
      if (format == "json")
        std::cout << Json{{"group", format_group(r.group)}}.dump(2) << "\n";
      else
        std::cout << "Hom_Lambda(" << desc_text << ", " << desc_text2
                  << ") = " << format_group(r.group) << "\n";
      return kOk;
    }
    if (*c_table) return cmd_table(n_flag, k_flag, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

#include "mhall/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhall/bmodule.hpp"
#include "mhall/catalog.hpp"
#include "mhall/category.hpp"
#include "mhall/errors.hpp"
#include "mhall/hall.hpp"
#include "mhall/io.hpp"
#include "mhall/kth.hpp"
#include "mhall/minor_hopf.hpp"

namespace mhall {
namespace {

struct Options {
  std::string format = "text";
  std::string catalog_path;
  int bound = 6;
  bool json() const { return format == "json"; }
};

Catalog obtain_catalog(const Options& opt, int needed) {
  if (needed > opt.bound) {
    throw ValidationError(ValidationError::Code::BoundExceeded,
                          "operation needs catalog degree " + std::to_string(needed) +
                              "; raise --bound to allow it");
  }
  std::string path = opt.catalog_path;
  if (path.empty()) {
    if (const char* env = std::getenv("MHALL_CATALOG")) path = env;
  }
  if (!path.empty()) {
    Catalog cat = Catalog::load_file(path);
    if (cat.bound() >= needed) return cat;
    throw ValidationError(ValidationError::Code::BoundExceeded,
                          "catalog file bound " + std::to_string(cat.bound()) +
                              " is below the required degree " + std::to_string(needed));
  }
  return Catalog::build(needed, EnumerateOptions{std::max(needed, 1), needed >= 7});
}

nlohmann::json lin_to_json(const IsoLin& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, x] : f.terms()) {
    terms.push_back({{"coeff", coeff_to_string(x)}, {"class", canon_hex(c)}});
  }
  return terms;
}

nlohmann::json tensor_to_json(const TensorLin& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [pair, x] : t) {
    terms.push_back({{"coeff", coeff_to_string(x)},
                     {"left", canon_hex(pair.first)},
                     {"right", canon_hex(pair.second)}});
  }
  return terms;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pointed-matroid algebra workbench"};
  app.name("mhall");
  auto opt = std::make_shared<Options>();
  int rc = 0;

  app.add_option("--format", opt->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--catalog", opt->catalog_path,
                 "Catalog file (defaults to $MHALL_CATALOG, else built in memory)");
  app.add_option("--bound", opt->bound, "Largest catalog degree this invocation may build")
      ->capture_default_str();
  app.require_subcommand(1);
  app.fallthrough();  // accept the global options after the subcommand too

  // validate
  {
    auto files = std::make_shared<std::vector<std::string>>();
    auto* cmd = app.add_subcommand("validate", "Validate matroid documents");
    cmd->add_option("matroid", *files, "Fixture names or files")->required();
    cmd->callback([&out, opt, files, &rc] {
      nlohmann::json results = nlohmann::json::array();
      for (const auto& f : *files) {
        try {
          load_matroid(f);
          if (opt->json()) {
            results.push_back({{"input", f}, {"ok", true}});
          } else {
            out << "ok " << f << "\n";
          }
        } catch (const ValidationError& e) {
          rc = 1;
          if (opt->json()) {
            results.push_back({{"input", f}, {"ok", false}, {"error", e.what()}});
          } else {
            out << "invalid " << f << ": " << e.what() << "\n";
          }
        }
      }
      if (opt->json()) out << results.dump() << "\n";
    });
  }

  // iso
  {
    auto names = std::make_shared<std::vector<std::string>>();
    auto* cmd = app.add_subcommand("iso", "Decide isomorphism and print a witness bijection");
    cmd->add_option("matroid", *names, "Two matroids")->expected(2);
    cmd->callback([&out, opt, names, &rc] {
      PointedMatroid a = load_matroid((*names)[0]);
      PointedMatroid b = load_matroid((*names)[1]);
      auto witness = find_isomorphism(a, b);
      if (!witness) {
        rc = 1;
        if (opt->json()) {
          out << nlohmann::json{{"isomorphic", false}}.dump() << "\n";
        } else {
          out << "not isomorphic\n";
        }
        return;
      }
      nlohmann::json map = nlohmann::json::object();
      for (int i = 0; i < a.ground().size(); ++i) {
        map[a.ground().label(i)] = b.ground().label((*witness)[i]);
      }
      if (opt->json()) {
        out << nlohmann::json{{"isomorphic", true}, {"witness", map}}.dump() << "\n";
      } else {
        for (int i = 0; i < a.ground().size(); ++i) {
          out << a.ground().label(i) << " -> " << b.ground().label((*witness)[i]) << "\n";
        }
      }
    });
  }

  // minor
  {
    auto name = std::make_shared<std::string>();
    auto restrict_labels = std::make_shared<std::vector<std::string>>();
    auto contract_labels = std::make_shared<std::vector<std::string>>();
    auto* cmd = app.add_subcommand("minor", "Emit a restriction or contraction");
    cmd->add_option("matroid", *name)->required();
    auto* r = cmd->add_option("--restrict", *restrict_labels, "Elements to restrict to")
                  ->delimiter(',');
    cmd->add_option("--contract", *contract_labels, "Elements to contract")
        ->delimiter(',')
        ->excludes(r);
    cmd->callback([&out, opt, name, restrict_labels, contract_labels] {
      PointedMatroid m = load_matroid(*name);
      PointedMatroid result = m;
      if (!restrict_labels->empty()) {
        result = m.restrict_to(m.ground().mask_of(*restrict_labels));
      } else if (!contract_labels->empty()) {
        result = m.contract_by(m.ground().mask_of(*contract_labels));
      }
      out << matroid_to_json(result).dump(opt->json() ? -1 : 2) << "\n";
    });
  }

  // hall-product
  {
    auto names = std::make_shared<std::vector<std::string>>();
    auto* cmd = app.add_subcommand("hall-product", "Convolution product of two basis classes");
    cmd->add_option("matroid", *names)->expected(2);
    cmd->callback([&out, opt, names] {
      IsoLin f = delta(load_matroid((*names)[0]));
      IsoLin g = delta(load_matroid((*names)[1]));
      int needed = f.terms().begin()->first.degree + g.terms().begin()->first.degree;
      Catalog cat = obtain_catalog(*opt, needed);
      IsoLin prod = hall_product(f, g, cat);
      if (opt->json()) {
        out << lin_to_json(prod).dump() << "\n";
      } else {
        out << to_text(prod);
      }
    });
  }

  // hall-coproduct
  {
    auto name = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("hall-coproduct", "Componentwise coproduct of a basis class");
    cmd->add_option("matroid", *name)->required();
    cmd->callback([&out, opt, name] {
      TensorLin cop = hall_coproduct(delta(load_matroid(*name)));
      if (opt->json()) {
        out << tensor_to_json(cop).dump() << "\n";
      } else {
        out << to_text(cop);
      }
    });
  }

  // structure-constant
  {
    auto na = std::make_shared<std::string>();
    auto nc = std::make_shared<std::string>();
    auto nb = std::make_shared<std::string>();
    auto extensions = std::make_shared<bool>(false);
    auto* cmd = app.add_subcommand("structure-constant",
                                   "Subsets S of B with B|S = C and B/S = A (up to iso)");
    cmd->add_option("--A", *na)->required();
    cmd->add_option("--C", *nc)->required();
    cmd->add_option("--B", *nb)->required();
    cmd->add_flag("--extensions", *extensions,
                  "Also print the automorphism-weighted extension count");
    cmd->callback([&out, opt, na, nc, nb, extensions] {
      IsoClass a = canonical_form(load_matroid(*na));
      IsoClass c = canonical_form(load_matroid(*nc));
      IsoClass b = canonical_form(load_matroid(*nb));
      long g = structure_constant(a, c, b);
      if (opt->json()) {
        nlohmann::json doc{{"value", g}};
        if (*extensions) doc["extensions"] = extension_count(a, c, b);
        out << doc.dump() << "\n";
      } else {
        out << g << "\n";
        if (*extensions) out << "extensions " << extension_count(a, c, b) << "\n";
      }
    });
  }

  // mm-coproduct
  {
    auto name = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("mm-coproduct", "Minor coproduct of a basis class");
    cmd->add_option("matroid", *name)->required();
    cmd->callback([&out, opt, name] {
      TensorLin cop = mm_coproduct(delta(load_matroid(*name)));
      if (opt->json()) {
        out << tensor_to_json(cop).dump() << "\n";
      } else {
        out << to_text(cop);
      }
    });
  }

  // antipode
  {
    auto name = std::make_shared<std::string>();
    auto table_degree = std::make_shared<int>(-1);
    auto* cmd = app.add_subcommand("antipode", "Antipode of a class");
    cmd->add_option("matroid", *name);
    cmd->add_option("--degree-table", *table_degree,
                    "Print the antipode of every catalog class up to this degree");
    cmd->callback([&out, opt, name, table_degree] {
      if (*table_degree >= 0) {
        Catalog cat = obtain_catalog(*opt, *table_degree);
        nlohmann::json table = nlohmann::json::array();
        for (int d = 0; d <= *table_degree; ++d) {
          for (const IsoClass& c : cat.at_degree(d)) {
            IsoLin s = antipode(c);
            if (opt->json()) {
              table.push_back({{"class", canon_hex(c)}, {"antipode", lin_to_json(s)}});
            } else {
              for (const auto& [t, x] : s.terms()) {
                out << canon_hex(c) << " " << coeff_to_string(x) << " " << canon_hex(t) << "\n";
              }
            }
          }
        }
        if (opt->json()) out << table.dump() << "\n";
        return;
      }
      if (name->empty()) throw ParseError("antipode needs a matroid or --degree-table");
      IsoLin s = antipode(canonical_form(load_matroid(*name)));
      if (opt->json()) {
        out << lin_to_json(s).dump() << "\n";
      } else {
        out << to_text(s);
      }
    });
  }

  // duality
  {
    auto name = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(-1);
    auto* cmd = app.add_subcommand(
        "duality", "Check Hall structure constants against transposed minor coproducts");
    cmd->add_option("matroid", *name);
    cmd->add_option("--degree", *degree, "Check every catalog class up to this degree");
    cmd->callback([&out, opt, name, degree, &rc] {
      bool ok = true;
      if (*degree >= 0) {
        Catalog cat = obtain_catalog(*opt, *degree);
        for (int d = 0; d <= *degree && ok; ++d) {
          for (const IsoClass& c : cat.at_degree(d)) {
            if (!duality_check(c, cat)) {
              ok = false;
              break;
            }
          }
        }
      } else {
        if (name->empty()) throw ParseError("duality needs a matroid or --degree");
        IsoClass b = canonical_form(load_matroid(*name));
        Catalog cat = obtain_catalog(*opt, b.degree);
        ok = duality_check(b, cat);
      }
      if (!ok) rc = 1;
      if (opt->json()) {
        out << nlohmann::json{{"ok", ok}}.dump() << "\n";
      } else {
        out << (ok ? "true" : "false") << "\n";
      }
    });
  }

  // k0
  {
    auto name = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("k0", "Grothendieck-group class (rank, corank)");
    cmd->add_option("matroid", *name)->required();
    cmd->callback([&out, opt, name] {
      K0Class k = k0_class(load_matroid(*name));
      if (opt->json()) {
        out << nlohmann::json{{"r", k.rank}, {"c", k.corank}}.dump() << "\n";
      } else {
        out << "r=" << k.rank << " c=" << k.corank << "\n";
      }
    });
  }

  // decompose
  {
    auto name = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("decompose", "Peel into one-element classes");
    cmd->add_option("matroid", *name)->required();
    cmd->callback([&out, opt, name] {
      std::string word = decompose(load_matroid(*name));
      if (opt->json()) {
        out << nlohmann::json{{"word", word}}.dump() << "\n";
      } else {
        out << word << "\n";
      }
    });
  }

  // flags
  {
    auto name = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    auto check = std::make_shared<bool>(false);
    auto* cmd = app.add_subcommand("flags", "Enumerate subset chains with their minor grids");
    cmd->add_option("matroid", *name)->required();
    cmd->add_option("--n", *n, "Chain length")->required();
    cmd->add_flag("--check", *check, "Verify every grid square");
    cmd->callback([&out, opt, name, n, check, &rc] {
      PointedMatroid m = load_matroid(*name);
      std::vector<FlagGrid> all = flags(m, *n);
      bool ok = true;
      if (*check) {
        for (const FlagGrid& f : all) ok = ok && check_grid(f);
        if (!ok) rc = 1;
      }
      if (opt->json()) {
        nlohmann::json doc{{"n", *n}, {"count", all.size()}};
        if (*check) doc["squares_ok"] = ok;
        out << doc.dump() << "\n";
      } else {
        out << "n=" << *n << " count=" << all.size() << "\n";
        if (*check) out << "squares " << (ok ? "ok" : "FAILED") << "\n";
      }
    });
  }

  // verify-axioms
  {
    auto max_degree = std::make_shared<int>(3);
    auto universal = std::make_shared<int>(-1);
    auto* cmd = app.add_subcommand("verify-axioms", "Run the proto-exact axiom checker");
    cmd->add_option("--max-degree", *max_degree, "Catalog degree bound")->capture_default_str();
    cmd->add_option("--universal-degree", *universal,
                    "Also run in-category universal-property checks up to this corner degree");
    cmd->callback([&out, opt, max_degree, universal, &rc] {
      Catalog cat = obtain_catalog(*opt, *max_degree);
      std::vector<PointedMatroid> matroids;
      for (int d = 0; d <= *max_degree; ++d) {
        for (const IsoClass& c : cat.at_degree(d)) matroids.push_back(matroid_of(c));
      }
      ProtoExactReport rep = verify_proto_exact(matroids, VerifyOptions{*universal});
      if (!rep.ok()) rc = 1;
      if (opt->json()) {
        nlohmann::json doc;
        for (int k = 1; k <= 5; ++k) {
          doc["prop" + std::to_string(k)] = {{"instances", rep.property[k].instances},
                                             {"failures", rep.property[k].failures}};
        }
        doc["notes"] = rep.failure_notes;
        out << doc.dump() << "\n";
      } else {
        out << rep.lines();
        for (const auto& note : rep.failure_notes) out << note << "\n";
      }
    });
  }

  // build-catalog
  {
    auto bound = std::make_shared<int>(6);
    auto path = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("build-catalog", "Enumerate classes and write a catalog file");
    cmd->add_option("--bound", *bound, "Top degree (7 needs --bound on the app as well)")
        ->capture_default_str();
    cmd->add_option("--out", *path, "Output file")->required();
    cmd->callback([&out, opt, bound, path] {
      if (*bound > 7) {
        throw ValidationError(ValidationError::Code::BoundExceeded,
                              "catalog bound is capped at 7");
      }
      if (*bound > opt->bound) {
        throw ValidationError(ValidationError::Code::BoundExceeded,
                              "raise --bound to build past degree " + std::to_string(opt->bound));
      }
      Catalog cat = Catalog::build(*bound, EnumerateOptions{std::max(1, *bound), *bound >= 7});
      cat.save_file(*path);
      auto counts = cat.counts();
      if (opt->json()) {
        out << nlohmann::json{{"bound", *bound}, {"counts", counts}}.dump() << "\n";
      } else {
        for (std::size_t d = 0; d < counts.size(); ++d) {
          out << "degree " << d << ": " << counts[d] << "\n";
        }
      }
    });
  }

  std::vector<const char*> argv;
  argv.push_back("mhall");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace mhall

#include <gmpxx.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qloop/barcomp.hpp"
#include "qloop/crystal.hpp"
#include "qloop/error.hpp"
#include "qloop/normal_order.hpp"
#include "qloop/textio.hpp"
#include "qloop/verify.hpp"

namespace {

struct Session {
  std::string cartan_file;
  std::optional<int> dmin, dmax;
  qloop::CartanData cartan = qloop::CartanData::sl2();

  void load() {
    if (cartan_file.empty()) throw qloop::ParseError("--cartan FILE is required");
    cartan = qloop::load_cartan_file(cartan_file);
  }
  qloop::PairingContext ctx() const {
    if (!dmin || !dmax)
      throw qloop::ParseError("this command is window-sensitive: pass --dmin and --dmax");
    return qloop::PairingContext{cartan, qloop::Window(*dmin, *dmax)};
  }
  qloop::Element elem(const std::string& text) const {
    return qloop::parse_element(text, cartan.rank());
  }
};

mpq_class parse_level(const std::string& text) {
  try {
    mpq_class m(text);
    m.canonicalize();
    return m;
  } catch (const std::invalid_argument&) {
    throw qloop::ParseError("invalid jet level: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the positive half of a quantum loop algebra"};
  app.require_subcommand(1);

  Session s;
  app.add_option("--cartan", s.cartan_file, "Cartan config file (rank/row/sym lines)");
  app.add_option("--dmin", s.dmin, "window floor for E-letter loop degrees");
  app.add_option("--dmax", s.dmax, "window ceiling for E-letter loop degrees");

  std::string xtext, ytext, mode, suite, level_text;
  int node = 1, degree = 0, depth = 1, margin_gen = 0, margin_bar = 2;
  std::vector<std::string> seed_texts;

  auto* straighten = app.add_subcommand("straighten", "rank-1 straightening to non-increasing degrees");
  straighten->add_option("element", xtext)->required();

  auto* normal = app.add_subcommand("normal-order", "move H-type letters right of E letters");
  normal->add_option("element", xtext)->required();

  auto* coprod = app.add_subcommand("coprod", "window-truncated twisted coproduct");
  coprod->add_option("element", xtext)->required();

  auto* pair = app.add_subcommand("pair", "exact Hopf pairing of two elements");
  pair->add_option("x", xtext)->required();
  pair->add_option("y", ytext)->required();

  auto* fprime = app.add_subcommand("fprime", "apply F'_{i,n}");
  fprime->add_option("node", node)->required();
  fprime->add_option("n", degree)->required();
  fprime->add_option("element", xtext)->required();

  auto* kash = app.add_subcommand("kashiwara", "apply a Kashiwara operator");
  kash->add_option("op", mode, "e or f")->required();
  kash->add_option("node", node)->required();
  kash->add_option("n", degree)->required();
  kash->add_option("element", xtext)->required();

  auto* bar = app.add_subcommand("bar", "window-truncated bar involution");
  bar->add_option("element", xtext)->required();
  bar->add_option("--margin", margin_bar, "extra intermediate truncation depth");

  auto* bargen = app.add_subcommand("bar-gen", "truncated image of one E generator");
  bargen->add_option("node", node)->required();
  bargen->add_option("l", degree)->required();
  bargen->add_option("--margin", margin_gen, "extra truncation depth");

  auto* jet = app.add_subcommand("jet", "reduce modulo the slope filtration");
  jet->add_option("level", level_text, "rational level m")->required();
  jet->add_option("element", xtext)->required();

  auto* lattice = app.add_subcommand("lattice", "generate the Kashiwara-operator lattice");
  lattice->add_option("--depth", depth, "maximal operator word length")->required();
  lattice->add_option("--seed", seed_texts, "seed elements (element grammar); default 1");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    s.load();

    if (*straighten) {
      std::cout << qloop::serialize(qloop::straighten_rank1(s.elem(xtext), s.cartan)) << "\n";
    } else if (*normal) {
      std::cout << qloop::serialize(qloop::normal_order_H(s.elem(xtext), s.cartan)) << "\n";
    } else if (*coprod) {
      auto ctx = s.ctx();
      std::cout << qloop::coproduct(s.elem(xtext), ctx.cartan, ctx.window).str() << "\n";
    } else if (*pair) {
      qloop::PairingEngine engine(s.cartan);
      std::cout << engine.pair(s.elem(xtext), s.elem(ytext)).str() << "\n";
    } else if (*fprime) {
      qloop::PairingEngine engine(s.cartan);
      std::cout << qloop::serialize(engine.fprime(node, degree, s.elem(xtext))) << "\n";
    } else if (*kash) {
      auto ctx = s.ctx();
      qloop::PairingEngine engine(s.cartan);
      qloop::Element x = s.elem(xtext);
      qloop::Element r;
      if (mode == "e") {
        r = qloop::kashiwara_E(node, degree, x, ctx, engine);
      } else if (mode == "f") {
        r = qloop::kashiwara_F(node, degree, x, ctx, engine);
      } else {
        throw qloop::ParseError("kashiwara op must be e or f");
      }
      std::cout << qloop::serialize(r) << "\n";
    } else if (*bar) {
      std::cout << qloop::serialize(qloop::bar_element(s.elem(xtext), s.ctx(), margin_bar))
                << "\n";
    } else if (*bargen) {
      std::cout << qloop::serialize(qloop::bar_generator(node, degree, s.ctx(), margin_gen))
                << "\n";
    } else if (*jet) {
      auto ctx = s.ctx();
      qloop::JetEngine je(ctx);
      qloop::Jet j = je.jet(s.elem(xtext), parse_level(level_text));
      std::cout << j.header(ctx.window) << "\n" << qloop::serialize(j.value) << "\n";
    } else if (*lattice) {
      auto ctx = s.ctx();
      qloop::Coordinatizer coord(ctx);
      std::vector<std::pair<qloop::Element, std::string>> seeds;
      if (seed_texts.empty()) {
        seeds.push_back({qloop::Element::one(), "1"});
      } else {
        for (const auto& t : seed_texts) seeds.push_back({s.elem(t), t});
      }
      qloop::LatticeBasis lat = qloop::generate_lattice(depth, seeds, coord);
      for (size_t k = 0; k < lat.rows.size(); ++k) {
        const auto& row = lat.rows[k];
        std::cout << "ROW " << k << " pivot=" << qloop::word_str(row.pivot_label) << "@v^"
                  << row.pivot_val << " A=" << (row.coords_in_A() ? "yes" : "no") << " "
                  << row.provenance << "\n";
      }
      std::cout << "LATTICE depth=" << lat.depth << " rows=" << lat.rows.size()
                << " classes=" << lat.classes_found << " words=" << lat.words_applied << "\n";
    } else if (*verify) {
      if (!qloop::is_suite(suite)) throw qloop::ParseError("unknown suite: " + suite);
      qloop::SuiteReport rep = qloop::run_suite(suite, s.ctx());
      std::cout << qloop::format_report(rep);
      return rep.ok() ? 0 : 1;
    }
    return 0;
  } catch (const qloop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

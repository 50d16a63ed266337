#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qloop/error.hpp"
#include "qloop/parallel.hpp"
#include "qloop/textio.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gram-matrix benchmark: serial reference vs OpenMP kernels"};

  std::string cartan_file;
  int dmin = -2, dmax = 3, len = 3;
  bool check = false;
  app.add_option("--cartan", cartan_file, "Cartan config file; defaults to sl2");
  app.add_option("--dmin", dmin, "window floor");
  app.add_option("--dmax", dmax, "window ceiling");
  app.add_option("--len", len, "E-letter count of the weight family")->check(CLI::Range(1, 5));
  app.add_flag("--check", check, "compare serial and parallel results entry-wise");

  CLI11_PARSE(app, argc, argv);

  try {
    qloop::CartanData cartan =
        cartan_file.empty() ? qloop::CartanData::sl2() : qloop::load_cartan_file(cartan_file);
    qloop::PairingContext ctx{cartan, qloop::Window(dmin, dmax)};

    qloop::Weight alpha(std::vector<int>(cartan.rank(), 0), len * (dmin + dmax) / 2);
    alpha.q[0] = len;
    auto words = qloop::weight_monomials(alpha, ctx);
    std::vector<qloop::Element> family;
    for (const auto& w : words) family.push_back(qloop::Element::from_word(w));

    std::cout << "family: " << family.size() << " monomials of weight " << alpha.str()
              << ", window " << ctx.window.str() << "\n";
    std::cout << "threads: " << qloop::max_threads() << "\n";

    auto t0 = std::chrono::steady_clock::now();
    auto gs = qloop::gram_serial(family, family, cartan);
    double serial_ms = ms_since(t0);
    std::cout << "serial:   " << serial_ms << " ms\n";

    t0 = std::chrono::steady_clock::now();
    auto gp = qloop::gram_parallel(family, family, cartan);
    double parallel_ms = ms_since(t0);
    std::cout << "parallel: " << parallel_ms << " ms";
    if (parallel_ms > 0) std::cout << "  (speedup " << serial_ms / parallel_ms << "x)";
    std::cout << "\n";

    if (check) {
      if (gs != gp) {
        std::cout << "CHECK serial-vs-parallel FAIL\n";
        return 1;
      }
      std::cout << "CHECK serial-vs-parallel PASS (" << family.size() << "x" << family.size()
                << " entries equal)\n";
    }
    return 0;
  } catch (const qloop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// One line per acceptance criterion; exit status is the number of failures.
#include "pcoset/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace pcoset;

namespace {

int failures = 0;

SuiteConfig config(std::size_t trials) {
  SuiteConfig c;
  c.primes = {3, 5, 7};
  c.trials = trials;
  c.seed = 1;
  return c;
}

std::string summary(const SuiteReport& r) {
  std::string s = r.name + " " + std::to_string(r.trials - std::min(r.trials, r.failures)) + "/" +
                  std::to_string(r.trials);
  if (!r.pass() && !r.witnesses.empty()) s += " first witness " + r.witnesses.front().dump().substr(0, 400);
  return s;
}

void line(int id, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    std::tie(ok, detail) = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %2d  %-44s %7.2fs  %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::pair<bool, std::string> suite(const SuiteReport& r) { return {r.pass(), summary(r)}; }

}  // namespace

int main() {
  // 1, 3, 4 share one sampling pass
  CharfnReports core;
  double core_secs = 0;
  {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      core = check_charfn_core(config(200));
    } catch (const std::exception& e) {
      core.multiplicativity.fail({{"error", e.what()}});
    }
    core_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  line(1, "multiplicativity of chi (200 trials, <= 60s)", [&] {
    auto [ok, d] = suite(core.multiplicativity);
    return std::pair{ok && core_secs <= 60.0, d + " core " + std::to_string(core_secs) + "s"};
  });
  line(2, "closure of Nazarov relations", [] { return suite(check_nazarov_closure(config(200))); });
  line(3, "self-duality of chi", [&] { return suite(core.selfduality); });
  line(4, "Lambda sandwich", [&] { return suite(core.sandwich); });
  line(5, "representative independence", [] { return suite(check_representative_independence(config(100))); });
  line(6, "Theta_N stabilization", [] { return suite(check_theta_stabilization(config(100))); });
  line(7, "boundary formula", [] { return suite(check_boundary(config(100))); });
  line(8, "involution and M(lambda) scaling", [] { return suite(check_involution_and_scaling(config(100))); });
  line(9, "almost self-dual diagonal lattices", [] { return suite(check_fig1()); });
  line(10, "neighbors and graph morphisms", [] {
    const SuiteReport a = check_neighbors();
    const SuiteReport b = check_graph_morphism(config(100));
    return std::pair{a.pass() && b.pass(), summary(a) + "; " + summary(b)};
  });
  line(11, "continuity", [] { return suite(check_continuity(config(50))); });
  line(12, "Weil representation (<= 120s)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport r = check_weil(config(100));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::pair{r.pass() && s <= 120.0, summary(r)};
  });
  line(13, "verify all via CLI (exit 0, <= 300s)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = std::string("\"") + PCOSET_CLI + "\" verify all --trials 50 --seed 1 --out /dev/null";
    const int rc = std::system(cmd.c_str());
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::pair{rc == 0 && s <= 300.0, "exit " + std::to_string(rc)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

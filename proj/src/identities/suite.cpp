#include "qtasm/identities/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qtasm/errors.hpp"

namespace qtasm::identities {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"yang-baxter", "three-vertex Yang-Baxter relation, all 64 boundary orientations"},
      {"initial-value", "Z_QT(3), Z(1) and Z_HT(1) in closed form (symbolic)"},
      {"symmetry-inversion", "Z_QT(2m+1) symmetric in x_1..x_m and invariant under x -> 1/x, m = 1..4"},
      {"bulk-recursion", "Z_QT(2m+1) at x_i = a x_j, m = 2, 3"},
      {"middle-recursions", "Z_QT(2m+1) at x_{m+1} = a^{+-1} x_j, m = 2, 3"},
      {"reconstruction", "Z_QT(2m+1) rebuilt in x_{m+1} by interpolation, m = 1, 2, 3"},
      {"kuperberg-recursion", "Z^(r)(l) at x_i = a x_j, l = 2, 3, r = 1, 2"},
      {"ztilde-recursion", "Zt(l) at x_i = a x_j, l = 2, 3"},
      {"factorizations", "Z_QT of orders 3, 4, 5, 7 (8, 9 extended) as products of Pfaffian forms"},
      {"special-value", "relations at a = exp(i pi/3), l = 1 (l = 2 extended) and recursions l = 2, 3"},
      {"enumeration", "A_QT(4l+e) = A(l)^2 A_HT(2l+e), l = 1, 2, e = -1, 0, 1"},
      {"dwbc-ht-recursions", "Z(l; x, y) at y_i = a x_j and Z_HT(2l-1) at x_i = a x_j, l = 2, 3"},
      {"widths", "exponent ranges of symbolic Z_QT(2m+1), m = 1, 2, 3"},
  };
  return entries;
}

bool in_catalog(std::string_view name) {
  const auto& c = catalog();
  return std::any_of(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
}

Suite::Suite(SuiteOptions options) : options_(options), models_(options.rule, options.max_states) {
  if (options_.points < 1) throw ContractError("points per identity must be positive");
}

std::uint64_t Suite::seed_for(const std::string& key) const {
  // FNV-1a over the key, mixed with the suite seed
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ (options_.seed * 0x9E3779B97F4A7C15ULL);
}

namespace {

template <class F>
std::function<std::vector<IdentityReport>()> one(F f) {
  return [f] { return std::vector<IdentityReport>{f()}; };
}

}  // namespace

std::vector<std::function<std::vector<IdentityReport>()>> Suite::tasks(std::string_view name) const {
  std::vector<std::function<std::vector<IdentityReport>()>> out;
  if (name == "yang-baxter") {
    out.push_back(one([this] { return yang_baxter(); }));
  } else if (name == "initial-value") {
    out.emplace_back([this] { return initial_values(); });
  } else if (name == "symmetry-inversion") {
    for (int m = 1; m <= 4; ++m) out.emplace_back([this, m] { return symmetry_and_inversion(m); });
  } else if (name == "bulk-recursion") {
    for (int m : {2, 3}) out.push_back(one([this, m] { return bulk_recursion(m); }));
  } else if (name == "middle-recursions") {
    for (int m : {2, 3}) out.emplace_back([this, m] { return middle_recursions(m); });
  } else if (name == "reconstruction") {
    for (int m : {1, 2, 3}) out.push_back(one([this, m] { return reconstruction(m); }));
  } else if (name == "kuperberg-recursion") {
    for (int l : {2, 3}) {
      for (int r : {1, 2}) out.push_back(one([this, l, r] { return kuperberg_recursion(l, r); }));
    }
  } else if (name == "ztilde-recursion") {
    for (int l : {2, 3}) out.push_back(one([this, l] { return ztilde_recursion(l); }));
  } else if (name == "factorizations") {
    for (int l : {1, 2}) out.emplace_back([this, l] { return factorizations(l); });
  } else if (name == "special-value") {
    out.push_back(one([this] { return cyclotomic_identity(); }));
    out.emplace_back([this] { return special_value(1); });
    if (options_.extended) out.emplace_back([this] { return special_value(2); });
    for (int l : {2, 3}) out.emplace_back([this, l] { return special_recursions(l); });
  } else if (name == "enumeration") {
    out.emplace_back([this] { return enumeration(); });
  } else if (name == "dwbc-ht-recursions") {
    for (int l : {2, 3}) out.push_back(one([this, l] { return dwbc_recursion(l); }));
    for (int l : {2, 3}) out.push_back(one([this, l] { return ht_recursion(l); }));
  } else if (name == "widths") {
    for (int m : {1, 2, 3}) out.emplace_back([this, m] { return widths(m); });
  } else {
    std::string names;
    for (const auto& e : catalog()) names += (names.empty() ? "" : ", ") + e.name;
    throw ContractError("unknown identity '" + std::string(name) + "'; catalog: all, " + names);
  }
  return out;
}

namespace {

std::vector<IdentityReport> run_tasks(const std::vector<std::function<std::vector<IdentityReport>()>>& tasks,
                                      unsigned threads) {
  std::vector<std::vector<IdentityReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        results[k] = tasks[k]();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<IdentityReport> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

std::vector<IdentityReport> Suite::run(std::string_view name) const {
  if (name == "all") return run_all();
  return run_tasks(tasks(name), options_.threads);
}

std::vector<IdentityReport> Suite::run_all() const {
  std::vector<std::function<std::vector<IdentityReport>()>> all;
  for (const auto& e : catalog()) {
    auto t = tasks(e.name);
    all.insert(all.end(), t.begin(), t.end());
  }
  return run_tasks(all, options_.threads);
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
}

}  // namespace qtasm::identities

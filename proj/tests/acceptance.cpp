// Acceptance gate: every release-blocking requirement, one line apiece.
// Prints PASS/FAIL per criterion with wall time and exits nonzero on any
// failure. Budgets and tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sptrec/analytic.hpp"
#include "sptrec/arith.hpp"
#include "sptrec/oracles.hpp"
#include "sptrec/recurrences.hpp"
#include "sptrec/series.hpp"

namespace {

using sptrec::Identity;

bool all_pass = true;

// Runs one criterion, prints its verdict line, accumulates the global result.
// The callable returns an empty optional on success or a short failure detail.
void criterion(const std::string& name, double budget_seconds,
               const std::function<std::optional<std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
        failure = body();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    const double seconds = elapsed.count();
    if (!failure && seconds > budget_seconds) {
        std::ostringstream detail;
        detail << "exceeded budget of " << budget_seconds << " s";
        failure = detail.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (failure) {
        all_pass = false;
        line << "FAIL: " << name << " (" << seconds << " s) " << *failure;
    } else {
        line << "PASS: " << name << " (" << seconds << " s)";
    }
    std::cout << line.str() << "\n" << std::flush;
}

std::optional<std::string> identity_at(Identity id, int precision) {
    const sptrec::VerificationReport report = sptrec::verify_series_identity(id, precision);
    if (report.pass()) return std::nullopt;
    std::ostringstream detail;
    detail << sptrec::identity_name(id) << " fails first at n=" << *report.first_failure;
    return detail.str();
}

} // namespace

int main() {
    criterion("euler product times its inverse is exactly 1 to order 10000", 10.0, [] {
        return identity_at(Identity::euler, 10000);
    });

    criterion("smallest-parts identity to order 2000 and enumeration to 60", 30.0,
              []() -> std::optional<std::string> {
                  if (auto f = identity_at(Identity::thm1, 2000)) return f;
                  const sptrec::StatTable spt = sptrec::spt_table(60);
                  for (int n = 1; n <= 60; ++n)
                      if (spt.at(n) != sptrec::spt_oracle(n)) {
                          std::ostringstream detail;
                          detail << "enumeration mismatch at n=" << n;
                          return detail.str();
                      }
                  return std::nullopt;
              });

    criterion("overpartition identity, convolution, enumeration, and seed prefix", 30.0,
              []() -> std::optional<std::string> {
                  if (auto f = identity_at(Identity::thm2, 2000)) return f;
                  if (auto f = identity_at(Identity::cor1, 2000)) return f;
                  const sptrec::StatTable sptbar = sptrec::sptbar_table(40);
                  for (int n = 1; n <= 40; ++n)
                      if (sptbar.at(n) != sptrec::sptbar_oracle(n)) {
                          std::ostringstream detail;
                          detail << "enumeration mismatch at n=" << n;
                          return detail.str();
                      }
                  const std::int64_t seeds[] = {2, 0, 4, -4, 4, 0, 4, -8};
                  for (int n = 1; n <= 8; ++n)
                      if (sptrec::b_coeff(n) != seeds[n - 1]) {
                          std::ostringstream detail;
                          detail << "seed mismatch at n=" << n;
                          return detail.str();
                      }
                  return std::nullopt;
              });

    criterion("even-smallest-part identity, convolution, enumeration, and seed prefix", 30.0,
              []() -> std::optional<std::string> {
                  if (auto f = identity_at(Identity::thm3, 2000)) return f;
                  if (auto f = identity_at(Identity::cor2, 2000)) return f;
                  const sptrec::StatTable m2spt = sptrec::m2spt_table(60);
                  for (int n = 1; n <= 60; ++n)
                      if (m2spt.at(n) != sptrec::m2spt_oracle(n)) {
                          std::ostringstream detail;
                          detail << "enumeration mismatch at n=" << n;
                          return detail.str();
                      }
                  const std::int64_t seeds[] = {1, 1, 3, 3, 4};
                  for (int n = 2; n <= 6; ++n)
                      if (sptrec::c_coeff(n) != seeds[n - 2]) {
                          std::ostringstream detail;
                          detail << "seed mismatch at n=" << n;
                          return detail.str();
                      }
                  return std::nullopt;
              });

    criterion("inverse theta and inverse triangular prefixes", 5.0,
              []() -> std::optional<std::string> {
                  const sptrec::TruncatedSeries pbar = invert(sptrec::theta_series(6));
                  const std::int64_t pbar_expected[] = {1, 2, 4, 8, 14, 24, 40};
                  for (int n = 0; n <= 6; ++n)
                      if (pbar.coeff(n) != pbar_expected[n]) {
                          std::ostringstream detail;
                          detail << "overpartition count mismatch at n=" << n;
                          return detail.str();
                      }
                  const sptrec::TruncatedSeries m2 = invert(sptrec::triangular_series(6));
                  const std::int64_t m2_expected[] = {1, -1, 1, -2, 3, -4, 5};
                  for (int n = 0; n <= 6; ++n)
                      if (m2.coeff(n) != m2_expected[n]) {
                          std::ostringstream detail;
                          detail << "signed count mismatch at n=" << n;
                          return detail.str();
                      }
                  return std::nullopt;
              });

    criterion("gamma kernel integral matches the closed form on the 5x5 grid", 5.0,
              []() -> std::optional<std::string> {
                  for (const double a : {0.1, 0.5, 1.0, 2.0, 10.0})
                      for (const double b : {0.1, 0.5, 1.0, 2.0, 10.0}) {
                          const sptrec::NumericCheckResult r = sptrec::gamma_integral_check(a, b);
                          if (!r.pass || !(r.abs_error <= 1e-8)) {
                              std::ostringstream detail;
                              detail << "off at " << r.parameters
                                     << " abs_error=" << r.abs_error;
                              return detail.str();
                          }
                      }
                  return std::nullopt;
              });

    criterion("projected kernel sums equal the seeds for 1 <= N <= 200", 60.0,
              []() -> std::optional<std::string> {
                  for (int n = 1; n <= 200; ++n) {
                      const sptrec::NumericCheckResult rb = sptrec::projected_coefficient_B(n);
                      if (!rb.pass || !(rb.abs_error <= 1e-6)) {
                          std::ostringstream detail;
                          detail << "first kernel off at N=" << n << " abs_error=" << rb.abs_error;
                          return detail.str();
                      }
                      const sptrec::NumericCheckResult rc = sptrec::projected_coefficient_C(n);
                      if (!rc.pass || !(rc.abs_error <= 1e-6)) {
                          std::ostringstream detail;
                          detail << "second kernel off at N=" << n << " abs_error=" << rc.abs_error;
                          return detail.str();
                      }
                  }
                  return std::nullopt;
              });

    criterion("smallest-parts table to 100000 with convolution prefix check", 60.0,
              []() -> std::optional<std::string> {
                  const sptrec::StatTable spt = sptrec::spt_table(100000);
                  const sptrec::TruncatedSeries conv =
                      mul(invert(sptrec::euler_product_series(2000)), sptrec::a_series(2000));
                  if (conv.coeff(0) != 0) return std::string("convolution has nonzero constant");
                  for (int n = 1; n <= 2000; ++n)
                      if (spt.at(n) != conv.coeff(n)) {
                          std::ostringstream detail;
                          detail << "convolution mismatch at n=" << n;
                          return detail.str();
                      }
                  return std::nullopt;
              });

    if (all_pass) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: at least one criterion failed\n";
    return 1;
}

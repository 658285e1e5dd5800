// Copyright 2026 The gfft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gfft/afft.hpp"
#include "gfft/cfft.hpp"
#include "gfft/f127_example.hpp"
#include "gfft/io.hpp"
#include "gfft/mfft.hpp"

namespace {

using namespace gfft;

constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

using AnyPlan = std::variant<MultPlan, AddPlan, CyclicPlan>;

struct PlanOptions {
  std::string plan_file;
  std::string kind = "mult";
  std::uint32_t p = 0;
  unsigned r = 1;
  std::vector<unsigned> radices;
  std::vector<std::uint32_t> m;
  std::vector<std::uint32_t> basis;
  std::uint32_t beta = 0;
  std::uint32_t fiber = 0;
};

struct IoOptions {
  std::string in;
  std::string out;
  std::string format;
  bool random = false;
  std::uint64_t seed = 1;
  bool count = false;
};

void add_plan_options(CLI::App* cmd, PlanOptions& o) {
  cmd->add_option("--plan", o.plan_file, "Plan JSON file written by 'plan'");
  cmd->add_option("--case", o.kind, "mult, add or cyclic")
      ->check(CLI::IsMember({"mult", "add", "cyclic"}));
  cmd->add_option("--p", o.p, "Field characteristic");
  cmd->add_option("--r", o.r, "Extension degree");
  cmd->add_option("--radices", o.radices, "Radices p_1,...,p_r")->delimiter(',');
  cmd->add_option("--m", o.m, "Cyclic case: coefficients a,b of m(x) = x^2+ax+b")->delimiter(',');
  cmd->add_option("--basis", o.basis, "Additive case: subspace basis element codes")
      ->delimiter(',');
  cmd->add_option("--beta", o.beta, "Multiplicative case: coset shift code");
  cmd->add_option("--fiber", o.fiber, "Cyclic case: value of x_r fixing the point set");
}

void add_io_options(CLI::App* cmd, IoOptions& o) {
  cmd->add_option("--in", o.in, "Input file");
  cmd->add_option("--out", o.out, "Output file (default stdout)");
  cmd->add_option("--format", o.format, "json or csv (default from extension)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--random", o.random, "Use a random input vector");
  cmd->add_option("--seed", o.seed, "Seed for --random");
  cmd->add_flag("--count", o.count, "Report field-operation counts on stderr");
}

AnyPlan build_plan(const PlanOptions& o) {
  if (!o.plan_file.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(o.plan_file));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    const std::string kind = j.value("case", "");
    if (kind == "mult") return mult_plan_from_json(j);
    if (kind == "add") return add_plan_from_json(j);
    if (kind == "cyclic") return cyclic_plan_from_json(j);
    throw Error(Errc::ParseError, "plan file has no valid \"case\"");
  }
  if (o.p == 0) throw Error(Errc::InvalidArgument, "--p is required");
  FieldPtr f = Field::make(o.p, o.r);
  if (o.kind == "mult") {
    std::optional<Elem> beta;
    if (o.beta != 0) beta = f->element(o.beta);
    return mult_plan(f, o.radices, beta);
  }
  if (o.kind == "add") {
    std::vector<Elem> basis;
    for (auto c : o.basis) basis.push_back(f->element(c));
    if (basis.empty()) {
      // Default: the first k polynomial-basis elements with p^k = prod radices.
      for (auto p : o.radices) {
        if (p != f->p()) throw Error(Errc::InvalidArgument, "additive radices must equal p");
        std::uint32_t code = 1;
        for (std::size_t i = 0; i < basis.size(); ++i) code *= f->p();
        basis.push_back(f->element(code));
      }
    }
    return add_plan(f, basis);
  }
  std::optional<std::pair<Elem, Elem>> m;
  if (!o.m.empty()) {
    if (o.m.size() != 2) throw Error(Errc::InvalidArgument, "--m takes two codes a,b");
    m = std::make_pair(f->element(o.m[0]), f->element(o.m[1]));
  }
  std::optional<Elem> fiber;
  if (o.fiber != 0) fiber = f->element(o.fiber);
  return cyclic_plan(f, o.radices, m, fiber);
}

const Field& plan_field(const AnyPlan& plan) {
  return std::visit([](const auto& p) -> const Field& { return *p.field; }, plan);
}

std::size_t plan_size(const AnyPlan& plan) {
  return std::visit([](const auto& p) { return p.n; }, plan);
}

Basis native_basis(const AnyPlan& plan) {
  if (std::holds_alternative<AddPlan>(plan)) return Basis::Lch;
  if (std::holds_alternative<CyclicPlan>(plan)) return Basis::CyclicZ;
  return Basis::Standard;
}

nlohmann::json plan_json(const AnyPlan& plan) {
  if (auto* m = std::get_if<MultPlan>(&plan)) return mult_plan_to_json(*m);
  if (auto* a = std::get_if<AddPlan>(&plan)) return add_plan_to_json(*a);
  return cyclic_plan_to_json(std::get<CyclicPlan>(plan));
}

std::string summary(const AnyPlan& plan) {
  std::ostringstream out;
  const Field& f = plan_field(plan);
  out << "field F_" << f.q() << " (p=" << f.p() << ", r=" << f.r() << ")\n";
  if (auto* m = std::get_if<MultPlan>(&plan)) {
    out << "case mult, n = " << m->n << "\nomega = " << m->omega.code()
        << "\nbeta = " << m->beta.code() << "\n";
  } else if (auto* a = std::get_if<AddPlan>(&plan)) {
    out << "case add, n = " << a->n << "\n";
    for (std::size_t i = 0; i < a->betas.size(); ++i) {
      out << "beta_" << i + 1 << " = " << a->betas[i].code() << "\n";
    }
    if (a->n <= 64) {
      for (std::size_t i = 0; i < a->ells.size(); ++i) {
        out << "l_" << i << " = " << a->ells[i].to_string() << "\n";
      }
    }
  } else {
    const auto& c = std::get<CyclicPlan>(plan);
    out << "case cyclic, n = " << c.n << (c.full_line() ? " (full line)" : "") << "\n";
    out << "m = x^2+" << c.a.code() << "x+" << c.b.code() << "\n";
    out << "Q = " << c.q_poly.to_string() << "\n";
    for (std::size_t i = 0; i < c.level_maps.size(); ++i) {
      out << "X_" << i + 1 << "(T) = " << c.level_maps[i].to_string("T") << "; lambda =";
      for (auto l : c.lambdas[i]) out << " " << l.code();
      out << "\n";
    }
    if (c.xs.size() > 1) out << "x_1 = " << c.xs[1].to_string() << "\n";
    if (c.n <= 1024) out << "u_r0 = " << c.u_r0.to_string() << "\n";
    out << "c_r0 = " << c.c_r0.code() << "\n";
    for (std::size_t j = 0; j < c.tower.levels.size(); ++j) {
      const auto& L = c.tower.levels[j];
      if (!L.pole) continue;
      out << "c_" << j << " =";
      for (std::size_t i = 1; i < L.radix; ++i) {
        for (std::size_t k = i; k < L.radix; ++k) {
          out << " " << L.pole->constants[(i - 1) * (L.radix - 1) + (k - 1)].code();
        }
      }
      out << "\n";
    }
    if (c.fiber) out << "fiber x_r = " << c.fiber->code() << "\n";
  }
  return out.str();
}

bool use_csv(const IoOptions& o, const std::string& path) {
  if (!o.format.empty()) return o.format == "csv";
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
}

void emit(const IoOptions& o, const std::string& json_text, const std::string& csv_text) {
  const std::string& text = use_csv(o, o.out) ? csv_text : json_text;
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

CoeffVec load_coeffs(const IoOptions& o, const AnyPlan& plan) {
  const Field& f = plan_field(plan);
  if (o.random) {
    std::mt19937_64 rng(o.seed);
    CoeffVec v{native_basis(plan), {}};
    for (std::size_t i = 0; i < plan_size(plan); ++i) v.coeffs.push_back(f.element(rng() % f.q()));
    return v;
  }
  if (o.in.empty()) throw Error(Errc::InvalidArgument, "--in or --random is required");
  const std::string text = read_file(o.in);
  if (use_csv(o, o.in)) return coeffs_from_csv(f, text);
  try {
    return coeffs_from_json(f, nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

EvalVec load_values(const IoOptions& o, const AnyPlan& plan) {
  const Field& f = plan_field(plan);
  if (o.in.empty()) throw Error(Errc::InvalidArgument, "--in is required");
  const std::string text = read_file(o.in);
  if (use_csv(o, o.in)) return values_from_csv(f, text);
  try {
    return values_from_json(f, nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

// Aligns keyed values with the plan's point order.
EvalVec align(const EvalVec& v, const std::vector<Elem>& points) {
  std::vector<Place> places;
  for (auto p : points) places.push_back(Place::finite(p));
  if (v.points == places) return v;
  require_length(v.values.size(), points.size(), "values");
  std::map<Place, Elem> by_point;
  for (std::size_t s = 0; s < v.points.size(); ++s) by_point.emplace(v.points[s], v.values[s]);
  EvalVec out{places, {}};
  for (const auto& p : places) {
    auto it = by_point.find(p);
    if (it == by_point.end()) {
      throw Error(Errc::InvalidArgument, "missing value at point " + p.to_string());
    }
    out.values.push_back(it->second);
  }
  return out;
}

void report_count(const IoOptions& o, const OpCounter& c) {
  if (o.count) {
    std::cerr << "ops: adds=" << c.adds << " muls=" << c.muls << " invs=" << c.invs
              << " total=" << c.total() << "\n";
  }
}

int cmd_plan(const PlanOptions& po, const std::string& out) {
  const AnyPlan plan = build_plan(po);
  std::cout << summary(plan);
  if (!out.empty()) write_file(out, plan_json(plan).dump(2) + "\n");
  return 0;
}

int cmd_fft(const PlanOptions& po, const IoOptions& io) {
  const AnyPlan plan = build_plan(po);
  const CoeffVec in = load_coeffs(io, plan);
  OpCounter counter;
  EvalVec out;
  {
    CountingScope scope(counter);
    if (auto* m = std::get_if<MultPlan>(&plan)) out = mult_fft(*m, in);
    if (auto* a = std::get_if<AddPlan>(&plan)) out = add_fft(*a, in);
    if (auto* c = std::get_if<CyclicPlan>(&plan)) out = q1_fft(*c, in);
  }
  report_count(io, counter);
  emit(io, values_to_json(out).dump(2) + "\n", values_to_csv(out));
  return 0;
}

int cmd_ifft(const PlanOptions& po, const IoOptions& io) {
  const AnyPlan plan = build_plan(po);
  const EvalVec in = load_values(io, plan);
  OpCounter counter;
  CoeffVec out;
  {
    CountingScope scope(counter);
    if (auto* m = std::get_if<MultPlan>(&plan)) out = mult_ifft(*m, align(in, m->points));
    if (auto* a = std::get_if<AddPlan>(&plan)) out = add_ifft(*a, align(in, a->points));
    if (auto* c = std::get_if<CyclicPlan>(&plan)) out = q1_ifft(*c, in);
  }
  report_count(io, counter);
  emit(io, coeffs_to_json(out).dump(2) + "\n", coeffs_to_csv(out));
  return 0;
}

int cmd_convert(const PlanOptions& po, const IoOptions& io, const std::string& to) {
  const AnyPlan plan = build_plan(po);
  const CoeffVec in = load_coeffs(io, plan);
  const Basis target = basis_from_name(to);
  CoeffVec out = in;
  if (in.basis != target) {
    if (auto* a = std::get_if<AddPlan>(&plan)) {
      out = target == Basis::Lch ? standard_to_lch(*a, in) : lch_to_standard(*a, in);
    } else if (auto* c = std::get_if<CyclicPlan>(&plan)) {
      out = target == Basis::CyclicZ ? std_to_tilde(*c, in) : tilde_to_std(*c, in);
    } else {
      throw Error(Errc::BasisMismatch, "the multiplicative case only uses the standard basis");
    }
    if (out.basis != target) {
      throw Error(Errc::BasisMismatch, "no conversion to " + to + " for this plan");
    }
  }
  emit(io, coeffs_to_json(out).dump(2) + "\n", coeffs_to_csv(out));
  return 0;
}

std::vector<f127::Row> load_rows(const std::string& path) {
  if (path.empty()) {
    const auto& rows = f127::evaluations();
    return {rows.begin(), rows.end()};
  }
  std::vector<f127::Row> rows;
  try {
    for (const auto& r : nlohmann::json::parse(read_file(path))) {
      const int alpha = r.at(0).is_string() ? -1 : r.at(0).get<int>();
      rows.push_back({alpha, r.at(1).get<std::uint32_t>(), r.at(2).get<std::uint32_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return rows;
}

int cmd_repro127(const std::string& table_file) {
  const auto t0 = std::chrono::steady_clock::now();
  const f127::Report rep = f127::replay(load_rows(table_file));
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& line : rep.lines) std::cout << line << "\n";
  std::cout << rep.matched << "/" << rep.total << " evaluation pairs match\n";
  if (!rep.first_mismatch.empty()) std::cout << "first mismatch: " << rep.first_mismatch << "\n";
  std::printf("time %.1f ms\n", ms);
  return rep.structure_ok && rep.matched == rep.total ? 0 : kExitMismatch;
}

struct BenchOptions {
  std::string kind = "mult";
  std::uint32_t p = 257;
  unsigned r = 1;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> fields;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchOptions& b) {
  struct Rung {
    std::size_t n;
    AnyPlan plan;
  };
  std::vector<Rung> rungs;
  if (b.kind == "cyclic" && !b.fields.empty()) {
    for (auto q : b.fields) {
      FieldPtr f = Field::make(q);
      std::vector<unsigned> radices;
      for (std::uint64_t n = q + 1; n > 1; n /= 2) {
        if (n % 2) throw Error(Errc::RadixNotDividing, "q+1 must be a power of two");
        radices.push_back(2);
      }
      rungs.push_back({q + 1u, cyclic_plan(f, radices)});
    }
  } else {
    FieldPtr f = Field::make(b.p, b.r);
    for (auto n : b.sizes) {
      const unsigned radix = b.kind == "add" ? f->p() : 2;
      std::vector<unsigned> radices;
      for (std::size_t m = n; m > 1; m /= radix) {
        if (m % radix) throw Error(Errc::InvalidArgument, "size must be a power of the radix");
        radices.push_back(radix);
      }
      PlanOptions po;
      po.kind = b.kind;
      po.p = b.p;
      po.r = b.r;
      po.radices = radices;
      rungs.push_back({n, build_plan(po)});
    }
  }
  std::cout << "n,ops,adds,muls,invs,ms,ratio\n";
  std::uint64_t prev = 0;
  for (const auto& rung : rungs) {
    IoOptions io;
    io.random = true;
    io.seed = b.seed;
    const CoeffVec in = load_coeffs(io, rung.plan);
    OpCounter c;
    const auto t0 = std::chrono::steady_clock::now();
    {
      CountingScope scope(c);
      if (auto* m = std::get_if<MultPlan>(&rung.plan)) mult_fft(*m, in);
      if (auto* a = std::get_if<AddPlan>(&rung.plan)) add_fft(*a, in);
      if (auto* cp = std::get_if<CyclicPlan>(&rung.plan)) q1_fft(*cp, in);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << rung.n << "," << c.total() << "," << c.adds << "," << c.muls << "," << c.invs
              << "," << ms << ",";
    if (prev) {
      std::cout << static_cast<double>(c.total()) / static_cast<double>(prev);
    } else {
      std::cout << "-";
    }
    std::cout << "\n";
    prev = c.total();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field FFTs over multiplicative, additive and cyclic groups"};
  app.require_subcommand(1);

  PlanOptions po;
  IoOptions io;
  std::string plan_out, to, table_file;
  BenchOptions bo;

  auto* plan = app.add_subcommand("plan", "Build a plan and print its summary");
  add_plan_options(plan, po);
  plan->add_option("--out", plan_out, "Write the plan JSON here");

  auto* fft = app.add_subcommand("fft", "Forward transform of a coefficient file");
  add_plan_options(fft, po);
  add_io_options(fft, io);

  auto* ifft = app.add_subcommand("ifft", "Inverse transform of a values file");
  add_plan_options(ifft, po);
  add_io_options(ifft, io);

  auto* convert = app.add_subcommand("convert", "Change the basis of a coefficient file");
  add_plan_options(convert, po);
  add_io_options(convert, io);
  convert->add_option("--to", to, "Target basis: standard, lch or cyclic-z")->required();

  auto* repro = app.add_subcommand("repro127", "Replay the F_127 worked example");
  repro->add_option("--expected", table_file, "JSON rows [alpha|\"inf\", f, f~] to compare against");

  auto* bench = app.add_subcommand("bench", "Field-operation counts on a size ladder");
  bench->add_option("--case", bo.kind)->check(CLI::IsMember({"mult", "add", "cyclic"}));
  bench->add_option("--p", bo.p, "Field characteristic");
  bench->add_option("--r", bo.r, "Extension degree");
  bench->add_option("--sizes", bo.sizes, "Ladder of transform lengths")->delimiter(',');
  bench->add_option("--fields", bo.fields, "Cyclic case: primes q with q+1 a power of two")
      ->delimiter(',');
  bench->add_option("--seed", bo.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*plan) return cmd_plan(po, plan_out);
    if (*fft) return cmd_fft(po, io);
    if (*ifft) return cmd_ifft(po, io);
    if (*convert) return cmd_convert(po, io, to);
    if (*repro) return cmd_repro127(table_file);
    if (*bench) return cmd_bench(bo);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}

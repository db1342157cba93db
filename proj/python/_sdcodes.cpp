// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "sdcodes/buildup.hpp"
#include "sdcodes/catalog.hpp"
#include "sdcodes/codefile.hpp"
#include "sdcodes/constructions.hpp"
#include "sdcodes/equiv.hpp"
#include "sdcodes/errors.hpp"

namespace py = pybind11;
using namespace sdcodes;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

Matrix to_matrix(const PrimeField& f, const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<Residue> v;
  v.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged rows");
    for (auto x : r) v.push_back(f.reduce(x));
  }
  return Matrix(f, rows.size(), cols, std::move(v));
}

Rows from_matrix(const Matrix& m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  return out;
}

Vector to_vector(const PrimeField& f, const std::vector<std::int64_t>& x) {
  std::vector<Residue> v;
  for (auto e : x) v.push_back(f.reduce(e));
  return Vector(f, std::move(v));
}

std::vector<Residue> from_vector(const Vector& v) { return {v.entries().begin(), v.entries().end()}; }

py::dict report_dict(const WeightReport& r) {
  py::dict d;
  d["min_weight"] = r.min_weight;
  d["exact"] = r.is_exact();
  d["bound"] = r.bound_value;
  d["work"] = r.work;
  d["witness"] = r.witness ? py::cast(from_vector(*r.witness)) : py::none();
  return d;
}

py::tuple step_tuple(const BuildStep& s) {
  return py::make_tuple(s.alpha.value(), s.gamma.value(), from_vector(s.x));
}

BuildStep make_step(const PrimeField& f, std::int64_t alpha, std::int64_t gamma, const std::vector<std::int64_t>& x) {
  return BuildStep{f(alpha), f(gamma), to_vector(f, x)};
}

WeightBudget make_budget(std::uint64_t work_units, std::optional<double> seconds, unsigned threads, std::uint64_t seed,
                         std::optional<std::size_t> target_bound) {
  WeightBudget b;
  b.work_units = work_units;
  b.seconds = seconds;
  b.threads = threads;
  b.seed = seed;
  b.target_bound = target_bound;
  return b;
}

}  // namespace

PYBIND11_MODULE(_sdcodes, m) {
  m.doc() = "Symmetric self-dual codes over prime fields";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init([](std::uint32_t p, const Rows& rows) { return LinearCode(to_matrix(PrimeField(p), rows)); }),
           py::arg("p"), py::arg("rows"))
      .def_property_readonly("p", [](const LinearCode& c) { return c.field().p(); })
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly("generator", [](const LinearCode& c) { return from_matrix(c.generator()); })
      .def("contains", [](const LinearCode& c, const std::vector<std::int64_t>& w) {
        return c.contains(to_vector(c.field(), w));
      })
      .def("is_self_dual", [](const LinearCode& c) { return is_self_dual(c); })
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return same_code(a, b); });

  py::class_<SymmetricSD>(m, "SymmetricSD")
      .def(py::init([](std::uint32_t p, const Rows& a) { return SymmetricSD(to_matrix(PrimeField(p), a)); }),
           py::arg("p"), py::arg("a"))
      .def_static("unit", [](std::uint32_t p, std::int64_t alpha) { return SymmetricSD::unit(PrimeField(p)(alpha)); })
      .def_property_readonly("p", [](const SymmetricSD& c) { return c.field().p(); })
      .def_property_readonly("half_n", &SymmetricSD::half_n)
      .def_property_readonly("a", [](const SymmetricSD& c) { return from_matrix(c.a()); })
      .def_property_readonly("generator", [](const SymmetricSD& c) { return from_matrix(c.generator()); })
      .def("code", &SymmetricSD::code)
      .def("__eq__", [](const SymmetricSD& a, const SymmetricSD& b) { return a == b; });

  m.def("roots_of_minus_one", [](std::uint32_t p) {
    const auto r = roots_of_minus_one(PrimeField(p));
    return py::make_tuple(r.first.value(), r.second.value());
  });

  m.def(
      "extend",
      [](const SymmetricSD& c, std::int64_t alpha, std::int64_t gamma, const std::vector<std::int64_t>& x,
         bool check_identities) { return extend(c, make_step(c.field(), alpha, gamma, x), check_identities); },
      py::arg("code"), py::arg("alpha"), py::arg("gamma"), py::arg("x"), py::arg("check_identities") = false);
  m.def(
      "reduce",
      [](const SymmetricSD& c, std::int64_t alpha) {
        auto [smaller, step] = reduce(c, c.field()(alpha));
        return py::make_tuple(smaller, step_tuple(step));
      },
      py::arg("code"), py::arg("alpha"));
  m.def(
      "admissible_steps",
      [](const SymmetricSD& c, std::int64_t alpha, std::optional<std::uint64_t> sample, std::uint64_t seed,
         bool include_trivial) {
        const StepEnumeration how{sample, seed, include_trivial};
        std::vector<py::tuple> out;
        for (const auto& s : admissible_steps(c, c.field()(alpha), how)) out.push_back(step_tuple(s));
        return out;
      },
      py::arg("code"), py::arg("alpha"), py::arg("sample") = py::none(), py::arg("seed") = 1,
      py::arg("include_trivial") = false);
  m.def(
      "search_chain",
      [](const SymmetricSD& base, std::size_t target_length, std::size_t beam, std::uint64_t samples,
         std::uint64_t work_units, std::uint64_t seed) {
        SearchOptions opt;
        opt.beam = beam;
        opt.samples = samples;
        opt.per_candidate.work_units = work_units;
        opt.seed = seed;
        const Chain ch = search_chain(base, target_length, opt);
        std::vector<py::tuple> steps;
        for (const auto& s : ch.steps) steps.push_back(step_tuple(s));
        py::dict d;
        d["steps"] = steps;
        d["code"] = ch.last();
        d["report"] = ch.results.empty() ? py::none() : py::object(report_dict(ch.results.back()));
        return d;
      },
      py::arg("base"), py::arg("target_length"), py::arg("beam") = 8, py::arg("samples") = 2000,
      py::arg("work_units") = 20'000'000, py::arg("seed") = 1);

  m.def(
      "min_weight",
      [](const LinearCode& c, std::uint64_t work_units, std::optional<double> seconds, unsigned threads,
         std::uint64_t seed, std::optional<std::size_t> target_bound) {
        WeightReport r;
        {
          py::gil_scoped_release release;
          r = min_weight(c, make_budget(work_units, seconds, threads, seed, target_bound));
        }
        return report_dict(r);
      },
      py::arg("code"), py::arg("work_units") = 1'000'000'000ULL, py::arg("seconds") = py::none(),
      py::arg("threads") = 1, py::arg("seed") = 1, py::arg("target_bound") = py::none());
  m.def(
      "min_weight_exhaustive", [](const LinearCode& c) { return report_dict(min_weight_exhaustive(c)); },
      py::arg("code"));

  m.def(
      "circulant_code",
      [](std::uint32_t p, const std::vector<std::int64_t>& row, std::optional<std::pair<std::int64_t, std::int64_t>> border) {
        const PrimeField f(p);
        CirculantSpec spec{to_vector(f, row), std::nullopt};
        if (border) spec.bordered = std::make_pair(f(border->first), f(border->second));
        return double_circulant_code(spec);
      },
      py::arg("p"), py::arg("row"), py::arg("bordered") = py::none());
  m.def(
      "qr_extended",
      [](std::uint32_t p, std::uint32_t ell) {
        const QRExtension e = qr_extended(QRSpec::make(ell, PrimeField(p)));
        return py::make_tuple(e.code, to_string(e.kind), e.border.value());
      },
      py::arg("p"), py::arg("ell"));

  m.def(
      "apply_transform",
      [](const LinearCode& c, const std::vector<std::size_t>& perm, const std::vector<std::int64_t>& signs) {
        std::vector<FieldElement> s;
        for (auto x : signs) s.push_back(c.field()(x));
        return apply(c, MonomialTransform(perm, s));
      },
      py::arg("code"), py::arg("perm"), py::arg("signs"));
  m.def(
      "random_transform",
      [](std::uint32_t p, std::size_t n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        const auto t = MonomialTransform::random(PrimeField(p), n, rng);
        std::vector<Residue> signs;
        for (const auto& s : t.signs()) signs.push_back(s.value());
        return py::make_tuple(t.perm(), signs);
      },
      py::arg("p"), py::arg("n"), py::arg("seed") = 1);
  m.def(
      "fingerprint",
      [](const LinearCode& c, std::uint64_t work_units) {
        const Fingerprint fp = fingerprint(c, work_units);
        py::dict d;
        d["n"] = fp.n;
        d["k"] = fp.k;
        d["p"] = fp.p;
        d["counts"] = fp.counts;
        d["exact_below"] = fp.exact_below;
        return d;
      },
      py::arg("code"), py::arg("work_units") = kDefaultFingerprintWork);
  m.def(
      "is_equivalent",
      [](const LinearCode& a, const LinearCode& b, std::uint64_t node_limit) -> py::tuple {
        const EquivalenceResult r = is_equivalent_small(a, b, node_limit);
        const char* answer = r.answer == Equivalence::yes ? "yes" : r.answer == Equivalence::no ? "no" : "unknown";
        if (!r.witness) return py::make_tuple(answer, py::none());
        std::vector<Residue> signs;
        for (const auto& s : r.witness->signs()) signs.push_back(s.value());
        return py::make_tuple(answer, py::make_tuple(r.witness->perm(), signs));
      },
      py::arg("a"), py::arg("b"), py::arg("node_limit") = kDefaultEquivalenceNodes);

  m.def(
      "read_code_file",
      [](const std::string& path) {
        const CodeFile f = read_code_file(path);
        return py::make_tuple(LinearCode(f.generator), f.metadata);
      },
      py::arg("path"));
  m.def(
      "write_code_file",
      [](const std::string& path, const LinearCode& c, const std::vector<std::pair<std::string, std::string>>& meta) {
        save_code_file(path, CodeFile{c.generator(), meta});
      },
      py::arg("path"), py::arg("code"), py::arg("metadata") = std::vector<std::pair<std::string, std::string>>{});

  m.def(
      "catalog_entry",
      [](const std::string& id, std::optional<std::string> path) {
        const Catalog cat = path ? Catalog::load(*path) : Catalog::load_default();
        const CatalogEntry& e = cat.at(id);
        py::dict d;
        d["id"] = e.id;
        d["p"] = e.matrix.field().p();
        d["n"] = e.n;
        d["k"] = e.k;
        d["d"] = e.d ? py::cast(*e.d) : py::none();
        d["form"] = e.form;
        d["rows"] = from_matrix(e.matrix);
        d["code"] = e.code();
        return d;
      },
      py::arg("id"), py::arg("catalog") = py::none());
  m.def(
      "verify_catalog",
      [](std::optional<std::string> path) {
        const Catalog cat = path ? Catalog::load(*path) : Catalog::load_default();
        std::vector<py::dict> out;
        for (const auto& l : verify_catalog(cat)) {
          py::dict d;
          d["entry"] = l.entry;
          d["check"] = l.check;
          d["pass"] = l.pass;
          d["detail"] = l.detail;
          out.push_back(d);
        }
        return out;
      },
      py::arg("catalog") = py::none());
}

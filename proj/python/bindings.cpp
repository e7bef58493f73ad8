#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "rankgeo/constructions.hpp"
#include "rankgeo/serialization.hpp"
#include "rankgeo/wiretap.hpp"

namespace py = pybind11;
using namespace rankgeo;

namespace {

using MutableTower = std::shared_ptr<FieldTower>;

MutableTower unconst(TowerPtr t) { return std::const_pointer_cast<FieldTower>(std::move(t)); }

Limits make_limits(std::optional<std::uint64_t> cap, unsigned jobs) {
  Limits lim;
  if (cap) {
    lim.subspace_cap = *cap;
    lim.codeword_cap = *cap;
    lim.brute_cap = *cap;
  }
  lim.jobs = jobs;
  return lim;
}

GrwMethod method_from_name(const std::string& name) {
  if (name == "geometric") return GrwMethod::Geometric;
  if (name == "subcode") return GrwMethod::Subcode;
  if (name == "parity") return GrwMethod::Parity;
  throw BadParameters("unknown method '" + name + "' (geometric, subcode, parity)");
}

Matrix matrix_from_lists(const MutableTower& tower,
                         const std::vector<std::vector<std::int64_t>>& rows, Scalars field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(tower, r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionOutOfRange("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, tower->element_from_serialized(rows[i][j]));
  }
  return m;
}

std::vector<std::vector<std::int64_t>> matrix_to_lists(const Matrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).log();
  return out;
}

std::vector<FieldElement> word_from_ints(const MutableTower& tower,
                                         const std::vector<std::int64_t>& vals) {
  std::vector<FieldElement> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) out[i] = tower->element_from_serialized(vals[i]);
  return out;
}

std::vector<std::int64_t> word_to_ints(const std::vector<FieldElement>& vals) {
  std::vector<std::int64_t> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) out[i] = vals[i].log();
  return out;
}

py::dict hierarchy_dict(const WeightHierarchy& h) {
  py::dict d;
  d["n"] = h.n;
  d["k"] = h.k;
  d["method"] = grw_method_name(h.method);
  d["weights"] = h.weights;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Rank-metric codes through their q-systems: generalized rank weights by "
      "three equivalent routes, structural verifiers, wiretap leakage, linear "
      "sets and the constant-weight classification. Field elements cross the "
      "boundary as serialized integers: -1 is zero, otherwise the exponent of "
      "the generator.";

  static py::exception<Error> exc(m, "RankGeoError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.what());
    }
  });

  py::enum_<Scalars>(m, "Scalars")
      .value("Fq", Scalars::Fq)
      .value("Fqm", Scalars::Fqm);

  py::class_<FieldElement>(m, "FieldElement")
      .def_static("zero", &FieldElement::zero)
      .def_static("from_log", &FieldElement::from_log, py::arg("log"))
      .def_property_readonly("log", &FieldElement::log)
      .def_property_readonly("is_zero", &FieldElement::is_zero)
      .def(py::self == py::self)
      .def("__repr__", [](FieldElement a) {
        return a.is_zero() ? std::string("FieldElement(zero)")
                           : "FieldElement(g^" + std::to_string(a.log()) + ")";
      });

  py::class_<FieldTower, MutableTower>(m, "FieldTower")
      .def_property_readonly("p", &FieldTower::p)
      .def_property_readonly("e", &FieldTower::e)
      .def_property_readonly("m", &FieldTower::m)
      .def_property_readonly("q", &FieldTower::q)
      .def_property_readonly("size", &FieldTower::size)
      .def_property_readonly("order", &FieldTower::order)
      .def_property_readonly("modulus", &FieldTower::modulus)
      .def_property_readonly("subfield_step", &FieldTower::subfield_step)
      .def("one", &FieldTower::one)
      .def("gen", &FieldTower::gen)
      .def("element", &FieldTower::element_from_serialized, py::arg("serialized"))
      .def("add", &FieldTower::add)
      .def("sub", &FieldTower::sub)
      .def("mul", &FieldTower::mul)
      .def("neg", &FieldTower::neg)
      .def("inv", &FieldTower::inv)
      .def("pow", &FieldTower::pow, py::arg("a"), py::arg("n"))
      .def("frobenius", &FieldTower::frobenius, py::arg("a"), py::arg("times") = 1)
      .def("is_in_subfield", &FieldTower::is_in_subfield)
      .def("expand", [](const FieldTower& t, FieldElement a) { return t.expand(a); })
      .def("expand",
           [](const FieldTower& t, FieldElement a, const std::vector<std::int64_t>& basis) {
             std::vector<FieldElement> b(basis.size());
             for (std::size_t i = 0; i < basis.size(); ++i)
               b[i] = t.element_from_serialized(basis[i]);
             return SubfieldExpansion(t, std::move(b)).expand(a);
           })
      .def("contract", [](const FieldTower& t, const std::vector<FieldElement>& coords) {
        return t.contract(coords);
      })
      .def_property_readonly("default_basis", &FieldTower::default_basis)
      .def("__repr__", [](const FieldTower& t) {
        return "FieldTower(p=" + std::to_string(t.p()) + ", e=" + std::to_string(t.e()) +
               ", m=" + std::to_string(t.m()) + ")";
      });

  m.def(
      "make_tower",
      [](std::int64_t p, std::int64_t e, std::int64_t mm, std::uint64_t bound) {
        return unconst(make_tower(p, e, mm, bound));
      },
      py::arg("p"), py::arg("e"), py::arg("m"), py::arg("table_bound") = kDefaultTableBound);
  m.def(
      "make_tower_q",
      [](std::int64_t q, std::int64_t mm, std::uint64_t bound) {
        return unconst(make_tower_q(q, mm, bound));
      },
      py::arg("q"), py::arg("m"), py::arg("table_bound") = kDefaultTableBound);

  py::class_<Matrix>(m, "Matrix")
      .def(py::init([](const MutableTower& t, std::size_t rows, std::size_t cols, Scalars field) {
             return Matrix(t, rows, cols, field);
           }),
           py::arg("tower"), py::arg("rows"), py::arg("cols"), py::arg("field") = Scalars::Fqm)
      .def_static(
          "identity",
          [](const MutableTower& t, std::size_t n, Scalars field) {
            return Matrix::identity(t, n, field);
          },
          py::arg("tower"), py::arg("n"), py::arg("field") = Scalars::Fqm)
      .def_static("from_rows", &matrix_from_lists, py::arg("tower"), py::arg("rows"),
                  py::arg("field") = Scalars::Fqm)
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def_property_readonly("field", &Matrix::field)
      .def("at", [](const Matrix& mtx, std::size_t r, std::size_t c) { return mtx.at(r, c).log(); })
      .def("set",
           [](Matrix& mtx, std::size_t r, std::size_t c, std::int64_t v) {
             mtx.set(r, c, mtx.tower()->element_from_serialized(v));
           })
      .def("to_lists", &matrix_to_lists)
      .def("transpose", &Matrix::transpose)
      .def(py::self == py::self)
      .def("__matmul__", [](const Matrix& a, const Matrix& b) { return a * b; })
      .def("__repr__", [](const Matrix& mtx) {
        return "Matrix(" + std::to_string(mtx.rows()) + "x" + std::to_string(mtx.cols()) + ")";
      });

  m.def("rref", [](const Matrix& mtx) {
    auto r = rref(mtx);
    return py::make_tuple(r.mat, r.rank);
  });
  m.def("rank", [](const Matrix& mtx) { return rank(mtx); });
  m.def("kernel", &kernel);
  m.def("fq_rank_of_fqm_vectors",
        [](const Matrix& rows) { return fq_rank_of_fqm_vectors(rows); });
  m.def("gaussian_binomial", &gaussian_binomial, py::arg("n"), py::arg("r"), py::arg("s"));
  m.def(
      "list_subspaces",
      [](const MutableTower& t, Scalars field, std::size_t n, std::size_t r,
         std::optional<std::uint64_t> cap) {
        auto en = enumerate_subspaces(t, field, n, r, make_limits(cap, 1));
        std::vector<Matrix> out;
        while (auto sub = en.next()) out.push_back(std::move(*sub));
        return out;
      },
      py::arg("tower"), py::arg("field"), py::arg("n"), py::arg("r"),
      py::arg("cap") = std::nullopt);

  py::class_<Codeword>(m, "Codeword")
      .def_property_readonly("coords", [](const Codeword& w) { return word_to_ints(w.coords); })
      .def_property_readonly("length", &Codeword::length)
      .def("__repr__", [](const Codeword& w) {
        std::string s = "Codeword([";
        for (std::size_t i = 0; i < w.coords.size(); ++i)
          s += (i ? ", " : "") + std::to_string(w.coords[i].log());
        return s + "])";
      });

  py::class_<RankMetricCode>(m, "RankMetricCode")
      .def_property_readonly("n", &RankMetricCode::n)
      .def_property_readonly("k", &RankMetricCode::k)
      .def_property_readonly("generator", &RankMetricCode::generator)
      .def_property_readonly("parity_check", &RankMetricCode::parity_check)
      .def_property_readonly("tower",
                             [](const RankMetricCode& c) { return unconst(c.tower()); })
      .def("encode",
           [](const RankMetricCode& c, const std::vector<std::int64_t>& message) {
             return c.encode(word_from_ints(unconst(c.tower()), message));
           })
      .def(py::self == py::self)
      .def("__repr__", [](const RankMetricCode& c) {
        return "RankMetricCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) + ")";
      });

  m.def("make_code", [](const MutableTower& t, const Matrix& gen) { return make_code(t, gen); });
  m.def("dual", &dual);
  m.def("rank_weight", [](const RankMetricCode& c, const std::vector<std::int64_t>& word) {
    return rank_weight(Codeword{c.tower(), word_from_ints(unconst(c.tower()), word)});
  });
  m.def("rank_weight", [](const Codeword& w) { return rank_weight(w); });
  m.def("hamming_weight", [](const Codeword& w) { return hamming_weight(w); });
  m.def(
      "min_rank_distance",
      [](const RankMetricCode& c, std::optional<std::uint64_t> cap) {
        return min_rank_distance(c, make_limits(cap, 1));
      },
      py::arg("code"), py::arg("cap") = std::nullopt);
  m.def(
      "rank_weight_distribution",
      [](const RankMetricCode& c, std::optional<std::uint64_t> cap) {
        return rank_weight_distribution(c, make_limits(cap, 1));
      },
      py::arg("code"), py::arg("cap") = std::nullopt);
  m.def("is_nondegenerate", &is_nondegenerate);
  m.def("reduce_degenerate", [](const RankMetricCode& c) {
    auto red = reduce_degenerate(c);
    return py::make_tuple(red.code, red.column_transform);
  });

  py::class_<QSystem>(m, "QSystem")
      .def_property_readonly("k", &QSystem::k)
      .def_property_readonly("n", &QSystem::n)
      .def_property_readonly("points", &QSystem::points)
      .def("__repr__", [](const QSystem& x) {
        return "QSystem(k=" + std::to_string(x.k()) + ", n=" + std::to_string(x.n()) + ")";
      });

  m.def("make_qsystem", &make_qsystem);
  m.def("qsystem_from_code", &qsystem_from_code);
  m.def("code_from_qsystem", &code_from_qsystem);
  m.def(
      "intersection_dim",
      [](const QSystem& x, const Matrix& sub, std::optional<std::uint64_t> cap) {
        return intersection_dim(x, sub, make_limits(cap, 1));
      },
      py::arg("x"), py::arg("subspace"), py::arg("cap") = std::nullopt);
  m.def(
      "grw_geometric",
      [](const RankMetricCode& c, std::size_t r, std::optional<std::uint64_t> cap, unsigned jobs) {
        return grw_geometric(c, r, make_limits(cap, jobs));
      },
      py::arg("code"), py::arg("r"), py::arg("cap") = std::nullopt, py::arg("jobs") = 1);
  m.def(
      "linear_set_points",
      [](const QSystem& x, std::optional<std::uint64_t> cap) {
        std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> out;
        for (const auto& p : linear_set_points(x, make_limits(cap, 1)))
          out.emplace_back(word_to_ints(p.representative), p.weight);
        return out;
      },
      py::arg("x"), py::arg("cap") = std::nullopt);
  m.def(
      "subspace_weight",
      [](const QSystem& x, const Matrix& sub, std::optional<std::uint64_t> cap) {
        return subspace_weight(x, sub, make_limits(cap, 1));
      },
      py::arg("x"), py::arg("subspace"), py::arg("cap") = std::nullopt);
  m.def(
      "is_scattered",
      [](const QSystem& x, std::optional<std::uint64_t> cap) {
        return is_scattered(x, make_limits(cap, 1));
      },
      py::arg("x"), py::arg("cap") = std::nullopt);

  m.def(
      "grw_subcode",
      [](const RankMetricCode& c, std::size_t r, std::optional<std::uint64_t> cap, unsigned jobs) {
        return grw_subcode(c, r, make_limits(cap, jobs));
      },
      py::arg("code"), py::arg("r"), py::arg("cap") = std::nullopt, py::arg("jobs") = 1);
  m.def(
      "grw_parity",
      [](const RankMetricCode& c, std::size_t r, std::optional<std::uint64_t> cap, unsigned jobs) {
        return grw_parity(c, r, make_limits(cap, jobs));
      },
      py::arg("code"), py::arg("r"), py::arg("cap") = std::nullopt, py::arg("jobs") = 1);
  m.def(
      "hierarchy",
      [](const RankMetricCode& c, const std::string& method, std::optional<std::uint64_t> cap,
         unsigned jobs) {
        return hierarchy_dict(hierarchy(c, method_from_name(method), make_limits(cap, jobs)));
      },
      py::arg("code"), py::arg("method") = "subcode", py::arg("cap") = std::nullopt,
      py::arg("jobs") = 1);
  m.def(
      "verify_duality",
      [](const RankMetricCode& c, std::optional<std::uint64_t> cap) {
        const auto rep = verify_duality(c, make_limits(cap, 1));
        py::dict d;
        d["primal"] = hierarchy_dict(rep.primal);
        d["dual"] = hierarchy_dict(rep.dual_side);
        d["complement"] = rep.complement;
        d["disjoint"] = rep.disjoint;
        d["covers_range"] = rep.covers_range;
        d["ok"] = rep.ok;
        return d;
      },
      py::arg("code"), py::arg("cap") = std::nullopt);

  m.def(
      "coset_encode",
      [](const RankMetricCode& c, const std::vector<std::int64_t>& secret, std::uint64_t seed) {
        Rng rng(seed);
        return coset_encode(c, word_from_ints(unconst(c.tower()), secret), rng);
      },
      py::arg("code"), py::arg("secret"), py::arg("seed") = 0);
  m.def("syndrome", [](const RankMetricCode& c, const Codeword& w) {
    return word_to_ints(syndrome(c, w));
  });
  m.def("eavesdrop", [](const Codeword& w, const Matrix& obs) {
    return word_to_ints(eavesdrop(w, obs));
  });
  m.def("leakage_dim", &leakage_dim, py::arg("code"), py::arg("observation"));
  m.def(
      "profile",
      [](const RankMetricCode& c, std::optional<std::uint64_t> cap, unsigned jobs) {
        const auto prof = profile(c, make_limits(cap, jobs));
        py::dict d;
        d["delta"] = prof.delta;
        d["Delta"] = prof.Delta;
        return d;
      },
      py::arg("code"), py::arg("cap") = std::nullopt, py::arg("jobs") = 1);
  m.def(
      "verify_sandwich",
      [](const RankMetricCode& c, std::optional<std::uint64_t> cap, unsigned jobs) {
        const auto rep = verify_sandwich(c, make_limits(cap, jobs));
        py::list rows;
        for (const auto& row : rep.rows) {
          py::dict r;
          r["u"] = row.u;
          r["delta_u"] = row.delta;
          r["Delta_u"] = row.Delta;
          r["sandwich_lhs_index"] = row.lhs_index;
          r["lhs_vacuous"] = row.lhs_vacuous;
          r["rhs_vacuous"] = row.rhs_vacuous;
          r["holds"] = row.holds;
          rows.append(std::move(r));
        }
        py::dict d;
        d["rows"] = std::move(rows);
        d["hierarchy"] = rep.hierarchy.weights;
        d["identity_ok"] = rep.identity_ok;
        d["all_hold"] = rep.all_hold;
        return d;
      },
      py::arg("code"), py::arg("cap") = std::nullopt, py::arg("jobs") = 1);
  m.def("check_leakage_relations", &check_leakage_relations, py::arg("code"), py::arg("seed") = 0,
        py::arg("rounds") = 20);

  m.def("hadamard_h1", &hadamard_h1, py::arg("q"), py::arg("m"), py::arg("k"),
        py::arg("table_bound") = kDefaultTableBound);
  m.def("hadamard_h2", &hadamard_h2, py::arg("q"), py::arg("m"), py::arg("k"),
        py::arg("table_bound") = kDefaultTableBound);
  m.def("hadamard_h2_expected_hierarchy", &hadamard_h2_expected_hierarchy, py::arg("m"),
        py::arg("k"));
  m.def("gabidulin", &gabidulin, py::arg("q"), py::arg("m"), py::arg("n"), py::arg("k"),
        py::arg("table_bound") = kDefaultTableBound);
  m.def(
      "check_counting_identity",
      [](const QSystem& x, std::size_t r, std::optional<std::uint64_t> cap) {
        const auto rep = check_counting_identity(x, r, make_limits(cap, 1));
        py::dict d;
        d["uniform"] = rep.uniform;
        if (rep.uniform) {
          d["common_dim"] = rep.common_dim;
          d["identity_holds"] = rep.identity_holds;
          d["lhs"] = rep.lhs;
          d["rhs"] = rep.rhs;
        } else if (rep.witnesses) {
          d["witnesses"] = py::make_tuple(rep.witnesses->first, rep.witnesses->second);
        }
        return d;
      },
      py::arg("x"), py::arg("r"), py::arg("cap") = std::nullopt);
  m.def(
      "classify_constant_weight",
      [](const RankMetricCode& c, std::optional<std::uint64_t> cap) {
        const auto res = classify_constant_weight(c, make_limits(cap, 1));
        py::dict d;
        d["verdict"] = res.verdict == ClassificationResult::Verdict::ConstantWeight
                           ? "constant_weight"
                           : "not_constant_weight";
        switch (res.structure) {
          case ClassificationResult::Structure::SingleGenerator:
            d["structure"] = "single_generator";
            break;
          case ClassificationResult::Structure::HadamardEquivalent:
            d["structure"] = "hadamard_equivalent";
            break;
          case ClassificationResult::Structure::NotApplicable:
            d["structure"] = "not_applicable";
            break;
        }
        d["reduced"] = res.reduced;
        d["original_length"] = res.original_length;
        d["reduced_length"] = res.reduced_length;
        if (res.verdict == ClassificationResult::Verdict::ConstantWeight) {
          d["weight"] = res.weight;
          if (res.single_generator)
            d["generator_row"] = word_to_ints(res.single_generator->coords);
          d["basis_certificate"] = res.basis_certificate;
          d["hierarchy"] = res.hierarchy_weights;
        } else if (res.witnesses) {
          d["witnesses"] = py::make_tuple(word_to_ints(res.witnesses->first.coords),
                                          word_to_ints(res.witnesses->second.coords));
        }
        return d;
      },
      py::arg("code"), py::arg("cap") = std::nullopt);

  m.def("code_to_json", &code_to_json);
  m.def("code_from_json", &code_from_json, py::arg("text"),
        py::arg("table_bound") = kDefaultTableBound);
}

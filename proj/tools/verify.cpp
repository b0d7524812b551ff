#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "polyseq/egfseries.hpp"
#include "polyseq/polybernoulli.hpp"
#include "polyseq/polycauchy.hpp"
#include "polyseq/polyfamilies.hpp"
#include "polyseq/stirling.hpp"

namespace polyseq::verify {

std::vector<SamplePoint> default_sample() {
  return {
      {1, Rational(1), {Rational(1)}},
      {2, Rational(1), {Rational(1)}},
      {1, Rational(1, 2), {Rational(2)}},
      {3, Rational(2), {Rational(1, 2), Rational(3)}},
      {-3, Rational(1), {Rational(1)}},
  };
}

namespace {

class Suite {
public:
  explicit Suite(std::string id) { report_.id = std::move(id); }

  template <class Where>
  void check(const Rational &expected, const Rational &actual, Where &&where,
             bool asserted = true) {
    if (expected == actual) {
      ++report_.passed;
      return;
    }
    Failure f{where(), expected.str(), actual.str()};
    (asserted ? report_.failures : report_.notes).push_back(std::move(f));
  }

  template <class Where>
  void check_poly(const Polynomial &expected, const Polynomial &actual, Where &&where) {
    if (expected == actual) {
      ++report_.passed;
      return;
    }
    report_.failures.push_back({where(), expected.to_json(), actual.to_json()});
  }

  void skip() { ++report_.skipped; }

  template <class Fn> void guarded(Fn &&fn) {
    try {
      fn();
    } catch (const PoleError &) {
      skip();
    }
  }

  Report &report() { return report_; }

private:
  Report report_;
};

std::string describe(const Params &p, std::size_t n) {
  return to_string(p) + " n=" + std::to_string(n);
}

std::string describe(const Params &p, std::size_t n, const Rational &x0) {
  return describe(p, n) + " x=" + x0.str();
}

enum class Signs { All, Positive, Negative };

template <class Fn>
void for_each_params(const Config &c, Suite &s, Fn &&fn, Signs signs = Signs::All) {
  for (const auto &sp : c.sample) {
    for (long k : c.ks) {
      if ((signs == Signs::Positive && k < 0) || (signs == Signs::Negative && k > 0)) {
        continue;
      }
      for (std::size_t m = 0; m <= c.m_max; ++m) {
        std::optional<Params> p;
        try {
          p.emplace(make_params(sp.a, sp.q, sp.L, k, static_cast<long>(m)));
        } catch (const PoleError &) {
          s.skip();
          continue;
        }
        fn(*p);
      }
    }
  }
}

constexpr CauchyKind kKinds[] = {CauchyKind::First, CauchyKind::Second};

EgfFamily number_family(CauchyKind kind) {
  return kind == CauchyKind::First ? EgfFamily::CauchyFirst : EgfFamily::CauchySecond;
}

EgfFamily poly_family(CauchyKind kind) {
  return kind == CauchyKind::First ? EgfFamily::CauchyFirstPoly : EgfFamily::CauchySecondPoly;
}

void suite_q1(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    for (auto kind : kKinds) {
      for (std::size_t n = 0; n <= c.n_max; ++n) {
        s.guarded([&] {
          s.check(mpc_number_explicit(kind, n, p), mpc_number_via_rstirling(kind, n, p),
                  [&] { return std::string(to_string(kind)) + " " + describe(p, n); });
        });
      }
    }
  });
}

void suite_cauchy_recurrence(const Config &c, Suite &s, Signs signs) {
  for_each_params(
      c, s,
      [&](const Params &p) {
        for (auto kind : kKinds) {
          s.guarded([&] {
            const CauchyTable table = build_cauchy_table(kind, p, c.n_max, 0);
            for (std::size_t n = 0; n <= c.n_max; ++n) {
              s.guarded([&] {
                s.check(mpc_number_explicit(kind, n, p), table.at(n, p.m()),
                        [&] { return std::string(to_string(kind)) + " " + describe(p, n); });
              });
            }
          });
        }
      },
      signs);
}

void suite_re3(const Config &c, Suite &s) {
  for (std::size_t m = 0; m <= c.m_max; ++m) {
    for (std::size_t n = 0; n < c.n_max; ++n) {
      const Rational lhs = Rational(2 + m) * m_cauchy(n + 1, m);
      const Rational rhs = Rational(1 + m) * m_cauchy(n, m + 1) -
                           Rational(n) * Rational(2 + m) * m_cauchy(n, m);
      s.check(lhs, rhs, [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  }
}

void suite_gen1kind(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    for (auto kind : kKinds) {
      s.guarded([&] {
        const auto coeffs = egf_coefficients(number_family(kind), p, std::nullopt, c.n_max);
        for (std::size_t n = 0; n <= c.n_max; ++n) {
          s.guarded([&] {
            s.check(mpc_number_explicit(kind, n, p), coeffs[n],
                    [&] { return std::string(to_string(kind)) + " " + describe(p, n); });
          });
        }
      });
    }
  });
}

void suite_gregory(const Config &c, Suite &s) {
  const Grid g = gregory_table(c.n_max, c.m_max);
  for (std::size_t n = 0; n <= c.n_max; ++n) {
    for (std::size_t m = 0; m <= c.m_max; ++m) {
      s.check(m_cauchy(n, m), factorial(n) * g(n, m),
              [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  }
}

void suite_integral(const Config &c, Suite &s) {
  for (const auto &sp : c.sample) {
    for (long a = 1; a <= 3; ++a) {
      for (long k : c.ks) {
        if (k < 1) {
          continue;
        }
        for (std::size_t m = 0; m <= c.m_max; ++m) {
          const Params p = make_params(a, sp.q, sp.L, k, static_cast<long>(m));
          for (auto kind : kKinds) {
            for (std::size_t n = 0; n <= c.n_max; ++n) {
              s.check(mpc_number_explicit(kind, n, p), pc_integral_oracle(kind, n, p),
                      [&] { return std::string(to_string(kind)) + " " + describe(p, n); });
            }
          }
        }
      }
    }
  }
}

void suite_duality(const Config &c, Suite &s, CauchyKind kind) {
  for_each_params(c, s, [&](const Params &p) {
    for (std::size_t n = 1; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(sign_power(n) * mpc_number_explicit(kind, n, p) / factorial(n),
                dual_side(kind, n, p), [&] { return describe(p, n); }, p.k() > 0);
      });
    }
  });
}

void suite_genfi(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    s.guarded([&] {
      const auto coeffs = egf_coefficients(EgfFamily::Bernoulli, p, std::nullopt, c.n_max);
      for (std::size_t n = 0; n <= c.n_max; ++n) {
        s.guarded([&] { s.check(mpb_explicit(n, p), coeffs[n], [&] { return describe(p, n); }); });
      }
    });
  });
}

void suite_genfi_inverse(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(inverse_stirling_closed_form(n, p), inverse_stirling_check(n, p),
                [&] { return describe(p, n); });
      });
    }
  });
}

void suite_gq1(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    const Rational seed = p.l().pow(p.a()) * inverse_power(p.a(), p.k());
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(mpb_explicit(n, p), h_explicit(n, p, 0), [&] { return describe(p, n); });
      });
    }
    for (std::size_t pc = 0; pc <= c.p_max; ++pc) {
      s.guarded([&] {
        s.check(seed, h_explicit(0, p, pc),
                [&] { return describe(p, 0) + " p=" + std::to_string(pc); });
      });
    }
  });
}

void suite_h_recurrence(const Config &c, Suite &s, Signs signs) {
  for_each_params(
      c, s,
      [&](const Params &p) {
        s.guarded([&] {
          const HTable table = build_h_table(p, c.n_max, c.p_max);
          for (std::size_t n = 0; n <= c.n_max; ++n) {
            for (std::size_t pc = 0; pc <= c.p_max; ++pc) {
              s.guarded([&] {
                s.check(h_explicit(n, p, pc), table.at(n, pc),
                        [&] { return describe(p, n) + " p=" + std::to_string(pc); });
              });
            }
          }
        });
      },
      signs);
}

void suite_alg1(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    s.guarded([&] {
      const auto column = build_h_table(p, c.n_max, 0).bernoulli_column();
      for (std::size_t n = 0; n <= c.n_max; ++n) {
        s.guarded([&] { s.check(mpb_explicit(n, p), column[n], [&] { return describe(p, n); }); });
      }
    });
  });
  const auto classic = bernoulli_classic(c.n_max);
  for (std::size_t n = 0; n <= c.n_max; ++n) {
    s.check(mpb_explicit(n, classic_params()), classic[n],
            [&] { return "classic n=" + std::to_string(n); });
  }
}

void suite_conversion(const Config &c, Suite &s, Conversion relation) {
  for_each_params(c, s, [&](const Params &p) {
    for (std::size_t n = 1; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(conversion_target(relation, n, p), convert(relation, n, p),
                [&] { return describe(p, n); });
      });
    }
  });
}

template <class Fn> void for_each_point(const Config &c, Suite &s, Fn &&fn, Signs signs = Signs::All) {
  for_each_params(
      c, s,
      [&](const Params &p) {
        for (const auto &x0 : c.points) {
          fn(p, x0);
        }
      },
      signs);
}

void suite_ggf(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (auto kind : kKinds) {
      s.guarded([&] {
        const auto coeffs = egf_coefficients(poly_family(kind), p, x0, c.n_max);
        for (std::size_t n = 0; n <= c.n_max; ++n) {
          s.guarded([&] {
            const Polynomial poly = mpc_polynomial(kind, n, p);
            const auto where = [&] {
              return std::string(to_string(kind)) + " " + describe(p, n, x0);
            };
            s.check(coeffs[n], poly(x0), where);
            s.check(mpc_number_explicit(kind, n, p), poly(Rational(0)), where);
          });
        }
      });
    }
  });
}

void suite_weighted_cauchy(const Config &c, Suite &s, CauchyKind kind) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(mpc_polynomial(kind, n, p)(x0), mpc_poly_weighted_eval(kind, n, p, x0),
                [&] { return describe(p, n, x0); });
      });
    }
  });
}

void suite_thm14(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(mpc_poly_inverse_closed_form(n, p), mpc_poly_inverse_check(n, p, x0),
                [&] { return describe(p, n, x0); });
      });
    }
  });
}

void suite_poly_duality(const Config &c, Suite &s, CauchyKind kind) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 1; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(mpc_poly_dual_target(kind, n, p, x0), mpc_poly_dual(kind, n, p, x0),
                [&] { return describe(p, n, x0); }, p.k() > 0);
      });
    }
  });
}

void suite_for4(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    s.guarded([&] {
      const auto coeffs = egf_coefficients(EgfFamily::BernoulliPoly, p, x0, c.n_max);
      for (std::size_t n = 0; n <= c.n_max; ++n) {
        s.guarded([&] {
          s.check(mpb_polynomial(n, p)(x0), coeffs[n], [&] { return describe(p, n, x0); });
        });
      }
    });
  });
}

void suite_for5(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(mpb_polynomial(n, p)(x0), mpb_poly_weighted_eval(n, p, x0),
                [&] { return describe(p, n, x0); });
      });
    }
  });
}

void suite_for6(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        s.check(inverse_stirling_closed_form(n, p), mpb_poly_weighted_inverse_check(n, p, x0),
                [&] { return describe(p, n, x0); });
      });
    }
  });
}

void suite_for7(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    s.guarded([&] {
      const HTable table = build_h_table(p, c.n_max, 0, x0);
      for (std::size_t n = 0; n <= c.n_max; ++n) {
        s.guarded([&] {
          s.check(mpb_polynomial(n, p)(x0), table.at(n, 0), [&] { return describe(p, n, x0); });
        });
      }
    });
  });
}

void suite_thm200(const Config &c, Suite &s, PolyRelation relation) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      s.guarded([&] {
        const auto r = thm200_check(relation, n, p, x0);
        s.check(r.rhs, r.lhs, [&] { return describe(p, n, x0); }, p.k() > 0);
      });
    }
  });
}

void suite_for13(const Config &c, Suite &s) {
  for_each_point(c, s, [&](const Params &p, const Rational &x0) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      for (std::size_t pc = 0; pc <= c.p_max; ++pc) {
        s.guarded([&] {
          s.check(h_polynomial(n, pc, p)(x0), h_poly_alternative_eval(n, pc, p, x0),
                  [&] { return describe(p, n, x0) + " p=" + std::to_string(pc); });
        });
      }
      if (x0 == Rational(0)) {
        s.guarded([&] {
          s.check_poly(mpb_polynomial(n, p), h_polynomial(n, 0, p),
                       [&] { return describe(p, n) + " p=0"; });
        });
      }
    }
  });
}

void suite_for14(const Config &c, Suite &s) {
  for_each_params(c, s, [&](const Params &p) {
    for (std::size_t n = 0; n < c.n_max; ++n) {
      for (std::size_t pc = 0; pc <= c.p_max && n + pc + 1 <= c.n_max; ++pc) {
        s.guarded([&] {
          const Polynomial rec = h_poly_recurrence(n, pc, p);
          const auto where = [&] { return describe(p, n) + " p=" + std::to_string(pc); };
          s.check_poly(h_polynomial(n + 1, pc, p), rec, where);
          s.check(h_explicit(n + 1, p, pc), rec(Rational(0)), where);
        });
      }
    }
    for (const auto &x0 : c.points) {
      s.guarded([&] {
        const HTable table = build_h_table(p, c.n_max, c.p_max, x0);
        for (std::size_t n = 0; n <= c.n_max; ++n) {
          for (std::size_t pc = 0; pc <= c.p_max; ++pc) {
            s.guarded([&] {
              s.check(h_polynomial(n, pc, p)(x0), table.at(n, pc),
                      [&] { return describe(p, n, x0) + " p=" + std::to_string(pc); });
            });
          }
        }
      });
    }
  });
}

void suite_double(const Config &c, Suite &s, DoubleEgfFamily family) {
  for (const auto &sp : c.sample) {
    for (std::size_t m = 0; m <= c.m_max; ++m) {
      s.guarded([&] {
        const Params p = make_params(sp.a, sp.q, sp.L, 1, static_cast<long>(m));
        const DoubleEgfReport r = double_egf_check(family, p, c.double_n, c.double_k);
        s.report().passed += r.compared - r.mismatches.size();
        for (const auto &mm : r.mismatches) {
          s.report().failures.push_back({to_string(p.with_order(-static_cast<long>(mm.order))) +
                                             " n=" + std::to_string(mm.n),
                                         mm.expected.str(), mm.actual.str()});
        }
      });
    }
  }
}

void suite_orthogonality(const Config &c, Suite &s) {
  const Rational points[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                             Rational(3, 7)};
  for (const auto &x : points) {
    for (std::size_t n = 0; n <= c.n_max; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        Rational ts(0), st(0);
        for (std::size_t j = i; j <= n; ++j) {
          ts += weighted_T(n, j, x) * weighted_S(j, i, x);
          st += weighted_S(n, j, x) * weighted_T(j, i, x);
        }
        const Rational delta(n == i ? 1 : 0);
        const auto where = [&] {
          return "x=" + x.str() + " n=" + std::to_string(n) + " i=" + std::to_string(i);
        };
        s.check(delta, ts, where);
        s.check(delta, st, where);
      }
    }
  }
}

void suite_f3(const Config &c, Suite &s) {
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t n = 0; n <= c.n_max + 2; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        const Rational rhs = r_stirling2(n + 1, i + 1, r - 1) -
                             Rational(r - 1) * r_stirling2(n, i + 1, r - 1);
        s.check(r_stirling2(n, i, r), rhs, [&] {
          return "r=" + std::to_string(r) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
        });
      }
    }
  }
}

void suite_f4(const Config &c, Suite &s) {
  for (std::size_t r = 1; r <= 5; ++r) {
    for (std::size_t n = 0; n <= c.n_max + 2; ++n) {
      s.check(Rational(r).pow(static_cast<long>(n)), r_stirling2(n, 0, r),
              [&] { return "r=" + std::to_string(r) + " n=" + std::to_string(n); });
    }
  }
}

using SuiteFn = std::function<void(const Config &, Suite &)>;

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"Q1", suite_q1},
      {"Re1", [](const Config &c, Suite &s) { suite_cauchy_recurrence(c, s, Signs::Positive); }},
      {"Re2", [](const Config &c, Suite &s) { suite_cauchy_recurrence(c, s, Signs::Negative); }},
      {"Re3", suite_re3},
      {"GEN1KIND", suite_gen1kind},
      {"Gregory", suite_gregory},
      {"integral", suite_integral},
      {"AN1", [](const Config &c, Suite &s) { suite_duality(c, s, CauchyKind::First); }},
      {"AN2", [](const Config &c, Suite &s) { suite_duality(c, s, CauchyKind::Second); }},
      {"GenFi", suite_genfi},
      {"GenFi-inv", suite_genfi_inverse},
      {"Gq1", suite_gq1},
      {"TGQ1", [](const Config &c, Suite &s) { suite_h_recurrence(c, s, Signs::Positive); }},
      {"TGQ11", [](const Config &c, Suite &s) { suite_h_recurrence(c, s, Signs::Negative); }},
      {"Alg1", suite_alg1},
      {"B-C1", [](const Config &c, Suite &s) { suite_conversion(c, s, Conversion::BFromC1); }},
      {"B-C2", [](const Config &c, Suite &s) { suite_conversion(c, s, Conversion::BFromC2); }},
      {"C1-B", [](const Config &c, Suite &s) { suite_conversion(c, s, Conversion::C1FromB); }},
      {"C2-B", [](const Config &c, Suite &s) { suite_conversion(c, s, Conversion::C2FromB); }},
      {"GGF", suite_ggf},
      {"thm13", [](const Config &c, Suite &s) { suite_weighted_cauchy(c, s, CauchyKind::First); }},
      {"ws", [](const Config &c, Suite &s) { suite_weighted_cauchy(c, s, CauchyKind::Second); }},
      {"thm14", suite_thm14},
      {"zR1", [](const Config &c, Suite &s) { suite_poly_duality(c, s, CauchyKind::First); }},
      {"zR2", [](const Config &c, Suite &s) { suite_poly_duality(c, s, CauchyKind::Second); }},
      {"For4", suite_for4},
      {"For5", suite_for5},
      {"For6", suite_for6},
      {"For7", suite_for7},
      {"thm200:For9", [](const Config &c, Suite &s) { suite_thm200(c, s, PolyRelation::For9); }},
      {"thm200:For10", [](const Config &c, Suite &s) { suite_thm200(c, s, PolyRelation::For10); }},
      {"thm200:For11", [](const Config &c, Suite &s) { suite_thm200(c, s, PolyRelation::For11); }},
      {"thm200:For12", [](const Config &c, Suite &s) { suite_thm200(c, s, PolyRelation::For12); }},
      {"For13", suite_for13},
      {"For14", suite_for14},
      {"DGF-C1", [](const Config &c, Suite &s) { suite_double(c, s, DoubleEgfFamily::CauchyFirst); }},
      {"DGF-C2", [](const Config &c, Suite &s) { suite_double(c, s, DoubleEgfFamily::CauchySecond); }},
      {"DGF-B", [](const Config &c, Suite &s) { suite_double(c, s, DoubleEgfFamily::Bernoulli); }},
      {"orthogonality", suite_orthogonality},
      {"F3", suite_f3},
      {"F4", suite_f4},
  };
  return suites;
}

std::string describe_ranges(const Config &c) {
  std::ostringstream os;
  os << "n<=" << c.n_max << " m<=" << c.m_max << " p<=" << c.p_max << " k={";
  for (std::size_t i = 0; i < c.ks.size(); ++i) {
    os << (i ? "," : "") << c.ks[i];
  }
  os << "} sample=" << c.sample.size();
  return os.str();
}

} // namespace

const std::vector<std::string> &identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto &entry : registry()) {
      out.push_back(entry.first);
    }
    return out;
  }();
  return ids;
}

bool is_identity(const std::string &id) {
  const auto &ids = identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Report run_identity(const std::string &id, const Config &config) {
  for (const auto &[name, fn] : registry()) {
    if (name == id) {
      Suite suite(id);
      fn(config, suite);
      suite.report().ranges = describe_ranges(config);
      return suite.report();
    }
  }
  throw std::invalid_argument("unknown identity: " + id);
}

std::vector<Report> run_identities(const std::vector<std::string> &ids, const Config &config) {
  std::vector<std::string> ordered;
  for (const auto &id : identity_ids()) {
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
      ordered.push_back(id);
    }
  }
  for (const auto &id : ids) {
    if (!is_identity(id)) {
      throw std::invalid_argument("unknown identity: " + id);
    }
  }

  std::vector<Report> reports;
  if (!config.parallel) {
    for (const auto &id : ordered) {
      reports.push_back(run_identity(id, config));
    }
    return reports;
  }
  std::vector<std::future<Report>> pending;
  for (const auto &id : ordered) {
    pending.push_back(std::async(std::launch::async, [&config, id] { return run_identity(id, config); }));
  }
  for (auto &f : pending) {
    reports.push_back(f.get());
  }
  return reports;
}

std::string render_text(const std::vector<Report> &reports) {
  std::ostringstream os;
  for (const auto &r : reports) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.id << "  checks=" << r.passed + r.failures.size()
       << " failed=" << r.failures.size() << " skipped=" << r.skipped << "  [" << r.ranges
       << "]\n";
    for (const auto &f : r.failures) {
      os << "  " << f.where << ": expected " << f.expected << ", got " << f.actual << "\n";
    }
    for (const auto &f : r.notes) {
      os << "  note (not asserted) " << f.where << ": expected " << f.expected << ", got "
         << f.actual << "\n";
    }
  }
  return os.str();
}

std::string render_json(const std::vector<Report> &reports) {
  nlohmann::json out = nlohmann::json::array();
  const auto failures = [](const std::vector<Failure> &list) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &f : list) {
      arr.push_back({{"where", f.where}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return arr;
  };
  for (const auto &r : reports) {
    out.push_back({{"identity", r.id},
                   {"ranges", r.ranges},
                   {"pass", r.ok()},
                   {"passed", r.passed},
                   {"skipped", r.skipped},
                   {"failures", failures(r.failures)},
                   {"notes", failures(r.notes)}});
  }
  return out.dump(2) + "\n";
}

} // namespace polyseq::verify

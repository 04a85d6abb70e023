#include "schema.hpp"

namespace frobcore::cli {

namespace {

using T = ArgType;

OpSchema pair_op(const std::string& kind, const std::string& op, const std::string& key, bool required) {
  return {kind, op, {{"pair", T::PairRef, true, ""}, {key, T::Ideal, required, "pair"}}, "pair"};
}

std::vector<OpSchema> build() {
  std::vector<OpSchema> s{
      {"ring", "", {{"vars", T::WordList, true, ""}, {"p", T::Int, true, ""}, {"order", T::Word, false, ""},
                    {"relations", T::PolyList, false, "self"}}, ""},
      {"ideal", "", {{"ring", T::RingRef, true, ""}, {"gens", T::Ideal, true, "ring"}}, ""},
      {"pair", "", {{"ring", T::RingRef, true, ""}, {"e", T::Int, false, ""}, {"u", T::Poly, true, "ring"}}, ""},
      {"cover", "", {{"base", T::RingRef, true, ""}, {"var", T::Word, false, ""}, {"poly", T::Poly, true, "ext"}}, ""},
      {"trace", "", {{"cover", T::CoverRef, true, ""}, {"values", T::PolyList, false, "cover.base"},
                     {"pi0", T::GradingRef, false, ""}}, ""},
      {"grading", "", {{"ring", T::RingRef, true, ""}, {"modulus", T::Int, true, ""}, {"degrees", T::IntList, true, ""}}, ""},
      {"enumerate", "", {{"schpec", T::IdealList, false, "self"}, {"cspec", T::IdealList, false, "self"}}, ""},
      {"verify-main-theorem", "", {{"base", T::PairRef, true, ""}, {"total", T::PairRef, true, ""},
                                   {"trace", T::TraceRef, true, ""}, {"a", T::Bool, false, ""},
                                   {"b", T::Bool, false, ""}, {"c", T::Bool, false, ""}}, ""},
      {"examples", "", {{"filter", T::Word, false, ""}}, ""},
  };
  for (const char* op : {"transpose", "image", "kappa", "rho", "lambda", "test-ideal", "cz-closure"})
    s.push_back(pair_op("compute", op, "ideal", true));
  s.push_back(pair_op("compute", "sigma", "ideal", false));
  s.push_back(pair_op("compute", "beta", "prime", true));
  s.push_back({"compute", "f-pure-locus", {{"pair", T::PairRef, true, ""}}, "pair"});
  s.push_back({"compute", "radical", {{"ring", T::RingRef, true, ""}, {"ideal", T::Ideal, true, "ring"}}, "ring"});
  s.push_back({"compute", "minimal-primes", {{"ring", T::RingRef, true, ""}, {"ideal", T::Ideal, true, "ring"}}, ""});
  s.push_back({"compute", "transpose-T", {{"trace", T::TraceRef, true, ""}, {"ideal", T::Ideal, true, "trace.base"}}, "trace"});
  s.push_back({"compute", "image-T", {{"trace", T::TraceRef, true, ""}, {"ideal", T::Ideal, true, "trace"}}, "trace.base"});
  s.push_back({"compute", "unit-T", {{"trace", T::TraceRef, true, ""}}, "trace.base"});
  s.push_back({"compute", "contract", {{"cover", T::CoverRef, true, ""}, {"ideal", T::Ideal, true, "cover"}}, "cover.base"});
  s.push_back({"compute", "homogeneous-part", {{"grading", T::GradingRef, true, ""}, {"ideal", T::Ideal, true, "grading"}}, "grading"});
  s.push_back({"compute", "fiber", {{"trace", T::TraceRef, true, ""}, {"prime", T::Ideal, true, "trace.base"}}, ""});

  const Param expect{"expect", T::Bool, false, ""};
  auto check = [&](const std::string& op, std::vector<Param> ps) {
    ps.push_back(expect);
    s.push_back({"check", op, std::move(ps), ""});
  };
  check("compatible", {{"pair", T::PairRef, true, ""}, {"ideal", T::Ideal, true, "pair"}});
  check("f-pure", {{"pair", T::PairRef, true, ""}});
  check("f-regular", {{"pair", T::PairRef, true, ""}});
  check("kappa-certified", {{"pair", T::PairRef, true, ""}, {"ideal", T::Ideal, true, "pair"}});
  check("tame", {{"trace", T::TraceRef, true, ""}, {"prime", T::Ideal, true, "trace.base"}});
  check("tame-random", {{"trace", T::TraceRef, true, ""}, {"count", T::Int, false, ""}, {"degree", T::Int, false, ""}});
  check("residual", {{"trace", T::TraceRef, true, ""}, {"prime", T::Ideal, true, "trace.base"},
                     {"point", T::Ideal, true, "trace"}});
  check("frobenius-commutes", {{"trace", T::TraceRef, true, ""}});
  check("diagram", {{"base", T::PairRef, true, ""}, {"total", T::PairRef, true, ""}, {"trace", T::TraceRef, true, ""}});
  check("fibered", {{"base", T::PairRef, true, ""}, {"total", T::PairRef, true, ""}, {"cover", T::CoverRef, true, ""}});
  check("quasi-fibered", {{"base", T::PairRef, true, ""}, {"total", T::PairRef, true, ""}, {"cover", T::CoverRef, true, ""}});
  check("veronese-tame", {{"grading", T::GradingRef, true, ""}, {"prime", T::Ideal, true, "grading"}});
  check("cyclic-field", {{"ring", T::RingRef, true, ""}, {"u", T::Poly, true, "ring"}, {"q", T::Int, true, ""},
                         {"prime", T::Ideal, true, "ring"}});
  for (auto& o : s)
    if (o.kind == "compute" && !o.result_ctx.empty()) o.params.push_back({"expect", T::Ideal, false, o.result_ctx});
  for (auto& o : s)
    if (o.op == "minimal-primes") o.params.push_back({"expect", T::IdealList, false, "ring"});
  return s;
}

}  // namespace

const std::vector<OpSchema>& schemas() {
  static const std::vector<OpSchema> s = build();
  return s;
}

const OpSchema* find_schema(const std::string& kind, const std::string& op) {
  for (const auto& s : schemas())
    if (s.kind == kind && s.op == op) return &s;
  return nullptr;
}

}  // namespace frobcore::cli

#include "proofid/structured.hpp"

#include "json_codec.hpp"
#include "proofid/error.hpp"

namespace proofid {

namespace detail {

Json encode(const Formula& f) {
  switch (f.kind()) {
    case Connective::Letter: return Json{{"kind", "letter"}, {"name", f.name()}};
    case Connective::Top: return Json{{"kind", "top"}};
    case Connective::Bot: return Json{{"kind", "bot"}};
    case Connective::Conj:
      return Json{{"kind", "conj"}, {"left", encode(f.left())}, {"right", encode(f.right())}};
    case Connective::Disj:
      return Json{{"kind", "disj"}, {"left", encode(f.left())}, {"right", encode(f.right())}};
    case Connective::Impl:
      return Json{{"kind", "impl"},
                  {"antecedent", encode(f.left())},
                  {"consequent", encode(f.right())}};
  }
  return {};
}

Json encode(const ArrowTerm& t) {
  std::string kind(to_string(t.kind()));
  switch (t.kind()) {
    case ArrowKind::Id:
    case ArrowKind::Bang:
      return Json{{"kind", kind}, {"a", encode(t.a())}};
    case ArrowKind::Proj1:
    case ArrowKind::Proj2:
    case ArrowKind::Inj1:
    case ArrowKind::Inj2:
    case ArrowKind::Eval:
    case ArrowKind::Zero:
      return Json{{"kind", kind}, {"a", encode(t.a())}, {"b", encode(t.b())}};
    case ArrowKind::Comp:
      return Json{{"kind", kind}, {"g", encode(t.first())}, {"f", encode(t.second())}};
    case ArrowKind::Curry:
      return Json{{"kind", kind}, {"f", encode(t.first())}};
    default:
      return Json{{"kind", kind}, {"f", encode(t.first())}, {"g", encode(t.second())}};
  }
}

Json encode(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaKind::Var:
      return Json{{"kind", "var"}, {"name", t.name()}, {"type", encode(t.type_annotation())}};
    case LambdaKind::Abs:
      return Json{{"kind", "abs"},
                  {"bound", t.name()},
                  {"boundType", encode(t.type_annotation())},
                  {"body", encode(t.body())}};
    case LambdaKind::App:
      return Json{{"kind", "app"}, {"fun", encode(t.fun())}, {"arg", encode(t.arg())}};
    case LambdaKind::MkPair:
      return Json{{"kind", "mkpair"}, {"first", encode(t.first())}, {"second", encode(t.second())}};
    case LambdaKind::Fst: return Json{{"kind", "fst"}, {"term", encode(t.first())}};
    case LambdaKind::Snd: return Json{{"kind", "snd"}, {"term", encode(t.first())}};
    case LambdaKind::Unit: return Json{{"kind", "unit"}};
  }
  return {};
}

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(std::string("structured input: missing field '") + name + "'");
  }
  return j.at(name);
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw Error("structured input: 'kind' must be a string");
  return k.get<std::string>();
}

}  // namespace

Formula decode_formula(const Json& j) {
  std::string k = kind_of(j);
  if (k == "letter") return Formula::letter(field(j, "name").get<std::string>());
  if (k == "top") return Formula::top();
  if (k == "bot") return Formula::bot();
  if (k == "conj") return Formula::conj(decode_formula(field(j, "left")), decode_formula(field(j, "right")));
  if (k == "disj") return Formula::disj(decode_formula(field(j, "left")), decode_formula(field(j, "right")));
  if (k == "impl") {
    return Formula::impl(decode_formula(field(j, "antecedent")),
                         decode_formula(field(j, "consequent")));
  }
  throw Error("structured input: unknown formula kind '" + k + "'");
}

ArrowTerm decode_arrow(const Json& j) {
  std::string k = kind_of(j);
  auto a = [&] { return decode_formula(field(j, "a")); };
  auto b = [&] { return decode_formula(field(j, "b")); };
  auto f = [&] { return decode_arrow(field(j, "f")); };
  auto g = [&] { return decode_arrow(field(j, "g")); };
  if (k == "id") return ArrowTerm::id(a());
  if (k == "bang") return ArrowTerm::bang(a());
  if (k == "p1") return ArrowTerm::proj1(a(), b());
  if (k == "p2") return ArrowTerm::proj2(a(), b());
  if (k == "i1") return ArrowTerm::inj1(a(), b());
  if (k == "i2") return ArrowTerm::inj2(a(), b());
  if (k == "eval") return ArrowTerm::eval(a(), b());
  if (k == "zero") return ArrowTerm::zero(a(), b());
  if (k == "comp") return ArrowTerm::comp(g(), f());
  if (k == "pair") return ArrowTerm::pair(f(), g());
  if (k == "case") return ArrowTerm::copair(f(), g());
  if (k == "sum") return ArrowTerm::sum(f(), g());
  if (k == "curry") return ArrowTerm::curry(f());
  throw Error("structured input: unknown arrow kind '" + k + "'");
}

LambdaTerm decode_lambda(const Json& j) {
  std::string k = kind_of(j);
  if (k == "var") {
    return LambdaTerm::var(field(j, "name").get<std::string>(), decode_formula(field(j, "type")));
  }
  if (k == "abs") {
    return LambdaTerm::abs(field(j, "bound").get<std::string>(),
                           decode_formula(field(j, "boundType")),
                           decode_lambda(field(j, "body")));
  }
  if (k == "app") return LambdaTerm::app(decode_lambda(field(j, "fun")), decode_lambda(field(j, "arg")));
  if (k == "mkpair") {
    return LambdaTerm::mk_pair(decode_lambda(field(j, "first")), decode_lambda(field(j, "second")));
  }
  if (k == "fst") return LambdaTerm::fst(decode_lambda(field(j, "term")));
  if (k == "snd") return LambdaTerm::snd(decode_lambda(field(j, "term")));
  if (k == "unit") return LambdaTerm::unit();
  throw Error("structured input: unknown lambda kind '" + k + "'");
}

}  // namespace detail

namespace {

detail::Json parse_json(std::string_view text) {
  try {
    return detail::Json::parse(text);
  } catch (const detail::Json::exception& e) {
    throw Error(std::string("structured input: ") + e.what());
  }
}

}  // namespace

std::string to_structured(const Formula& f) { return detail::encode(f).dump(); }
std::string to_structured(const ArrowTerm& t) { return detail::encode(t).dump(); }
std::string to_structured(const LambdaTerm& t) { return detail::encode(t).dump(); }

Formula formula_from_structured(std::string_view json) {
  try {
    return detail::decode_formula(parse_json(json));
  } catch (const detail::Json::exception& e) {
    throw Error(std::string("structured input: ") + e.what());
  }
}
ArrowTerm arrow_from_structured(std::string_view json) {
  try {
    return detail::decode_arrow(parse_json(json));
  } catch (const detail::Json::exception& e) {
    throw Error(std::string("structured input: ") + e.what());
  }
}
LambdaTerm lambda_from_structured(std::string_view json) {
  try {
    return detail::decode_lambda(parse_json(json));
  } catch (const detail::Json::exception& e) {
    throw Error(std::string("structured input: ") + e.what());
  }
}

}  // namespace proofid

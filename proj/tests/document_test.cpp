#include <gtest/gtest.h>

#include "conespec/document.hpp"

using namespace conespec;

namespace {

InequalityDocument doc_for(ConeRequest request) {
  request = normalize(request);
  return make_document(request, generate(request));
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::Parse;
}

}  // namespace

TEST(Document, RoundTrip) {
  for (const auto& request : {ConeRequest{ConeKind::Horn, {{"n", 3}}},
                              ConeRequest{ConeKind::LRmn, {{"m", 2}, {"n", 1}}},
                              ConeRequest{ConeKind::A, {{"p", 2}, {"q", 2}}, "embed"},
                              ConeRequest{ConeKind::S, {{"p", 2}, {"q", 1}}},
                              ConeRequest{ConeKind::T, {{"p", 2}, {"q", 1}}, "pullback"},
                              ConeRequest{ConeKind::Thompson, {{"p", 3}}}}) {
    const auto doc = doc_for(request);
    const auto text = render_json(doc);
    EXPECT_EQ(parse_json(text), doc) << text;
    EXPECT_EQ(render_json(parse_json(text)), text);
  }
}

TEST(Document, KeysAndValues) {
  const auto text = render_json(doc_for({ConeKind::A, {{"p", 2}, {"q", 2}}}));
  EXPECT_NE(text.find("\"schema\": \"conespec.inequalities/1\""), std::string::npos);
  EXPECT_NE(text.find("\"method\": \"fflp\""), std::string::npos);
  EXPECT_NE(text.find("\"lambda\""), std::string::npos);
}

TEST(Document, TextFormat) {
  const auto text = render_text(doc_for({ConeKind::A, {{"p", 2}, {"q", 2}}}));
  EXPECT_NE(text.find("λ1 − λ4 ≥ 2s1"), std::string::npos) << text;
}

TEST(Document, RejectsBadInput) {
  EXPECT_EQ(kind_of("{"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("[]"), ErrorKind::Schema);
  EXPECT_EQ(kind_of("{}"), ErrorKind::Schema);
  auto text = render_json(doc_for({ConeKind::Horn, {{"n", 2}}}));
  auto wrong_schema = text;
  wrong_schema.replace(wrong_schema.find("inequalities/1"), 14, "inequalities/9");
  EXPECT_EQ(kind_of(wrong_schema), ErrorKind::Schema);
  auto wrong_type = text;
  wrong_type.replace(wrong_type.find("\"dim\": 2"), 8, "\"dim\": \"2\"");
  EXPECT_EQ(kind_of(wrong_type), ErrorKind::Schema);
}

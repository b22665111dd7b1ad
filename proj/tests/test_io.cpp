#include <doctest.h>

#include "corpus.hpp"
#include "pca/io.hpp"

using namespace pca;
using corpus::vec;

namespace {

void round_trip(const FinAlg& a) {
  std::string once = io::dump(io::algebra_to_json(a));
  FinAlg back = io::algebra_from_json(io::parse_document(once));
  CHECK(back.same_table(a));
  CHECK(back.labels() == a.labels());
  CHECK(io::dump(io::algebra_to_json(back)) == once);
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(io::parse_field("QQ") == Field::rationals());
  CHECK(io::parse_field("GF(7)") == Field::prime(7));
  CHECK(io::parse_field("GF(2)(t)") == Field::rational_functions(2));
  Field f4 = io::parse_field("GF(2)[x]/(x^2+x+1)");
  CHECK(f4.degree() == 2);
  CHECK(f4.base() == Field::prime(2));
  Field e = io::parse_field("GF(2)(t)[x]/(x^2 + t)");
  CHECK(e.base() == Field::rational_functions(2));
  CHECK(e.minpoly()[0] == Field::rational_functions(2).generator());
  Field q2 = io::parse_field("QQ[x]/(x^2-2)");
  CHECK(q2.minpoly()[0] == Field::rationals().from_int(-2));
  CHECK(io::parse_field("QQ[x]/(x^3 - 1/2*x + 3)").minpoly()[1] == Field::rationals().parse("-1/2"));
  for (const char* bad : {"GF(4)", "GF(x)", "RR", "QQ[x]/(x^2-1)", "GF(2)[x]/(x^2+1)"}) CHECK_THROWS_AS(io::parse_field(bad), Error);
}

TEST_CASE("field documents round trip") {
  Field f4 = io::parse_field("GF(2)[x]/(x^2+x+1)");
  for (const Field& f : {Field::rationals(), Field::prime(5), Field::rational_functions(3), f4,
                         io::parse_field("GF(3)(t)[x]/(x^3-t)"), Field::extension(f4, {f4.generator(), f4.one(), f4.one()})}) {
    io::Json j = io::field_to_json(f);
    CHECK(io::field_from_json(j) == f);
    CHECK(io::field_from_json(io::parse_document(j.dump())) == f);
  }
}

TEST_CASE("algebra documents round trip") {
  Field q = Field::rationals();
  round_trip(upper_triangular(3, q));
  round_trip(group_algebra(4, Field::prime(2)));
  round_trip(matrix_algebra(2, Field::prime(3)));
  round_trip(field_extension_algebra(io::parse_field("GF(2)(t)[x]/(x^2+t)")));
  round_trip(base_change(group_algebra(3, q), io::parse_field("QQ[x]/(x^2+x+1)")));
  round_trip(tensor(upper_triangular(2, q), polynomial_quotient(corpus::poly(q, {1, 0, 1}))));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i)
    round_trip(corpus::random_algebra(i % 2 ? Field::prime(3) : Field::rationals(), rng, 6, i % 3 == 0));
}

TEST_CASE("algebra documents accept integers and a missing unit") {
  const char* text = R"({"field": {"kind": "prime", "p": 3}, "dim": 2,
                         "mult": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 1, 2]]})";
  FinAlg a = io::algebra_from_json(io::parse_document(text));
  CHECK(equal(a.unit(), vec(Field::prime(3), {1, 0})));
  CHECK(a.labels() == std::vector<std::string>{"e0", "e1"});
}

TEST_CASE("malformed documents") {
  auto fails = [](const char* text) {
    try {
      io::algebra_from_json(io::parse_document(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalVerificationFailed;
  };
  CHECK(fails("{") == ErrorKind::Parse);
  CHECK(fails(R"({"dim": 1, "mult": []})") == ErrorKind::Parse);
  CHECK(fails(R"({"field": "QQ", "dim": 1, "mult": [[0, 0]]})") == ErrorKind::Parse);
  CHECK(fails(R"({"field": "QQ", "dim": 1, "mult": [[0, 0, 3, "1"]]})") == ErrorKind::BadSpec);
  CHECK(fails(R"({"field": "QQ", "dim": 1, "mult": [[0, 0, 0, "1/0"]]})") != ErrorKind::InternalVerificationFailed);
  CHECK(fails(R"({"field": "QQ", "dim": 2, "mult": [[0, 0, 1, "1"]]})") == ErrorKind::NoUnit);
}

TEST_CASE("tower and quiver documents round trip") {
  Field f3 = Field::prime(3);
  QuiverSpec q{{"v"}, {{"x", "v", "v"}, {"y", "v", "v"}}, {{{f3.one(), {"x", "y"}}, {f3.from_int(-1), {"y", "x"}}}}};
  for (const Tower& t : {power_series_tower(Field::rationals(), 3), cyclic_group_tower(2, Field::prime(2), 2),
                         path_algebra_tower(q, f3, 3), product_tower({matrix_algebra(2, f3), matrix_algebra(1, f3)}, 2)}) {
    std::string once = io::dump(io::tower_to_json(t));
    Tower back = io::tower_from_json(io::parse_document(once));
    CHECK(back.depth() == t.depth());
    CHECK(back.kind() == t.kind());
    CHECK(io::dump(io::tower_to_json(back)) == once);
  }
  io::Json qj = io::quiver_to_json(q);
  QuiverSpec back = io::quiver_from_json(f3, qj);
  CHECK(io::quiver_to_json(back) == qj);
}

#include <doctest.h>

#include <sstream>

#include "cpdetect/io.hpp"
#include "cpdetect/rng.hpp"

using namespace cpdetect;

TEST_CASE("matrix csv round trip is bit exact") {
  RngStream rng(2718);
  ObservationMatrix x(13, 29);
  for (auto& v : x.values) v = rng.next_normal() * std::pow(10.0, rng.next_normal());
  std::ostringstream os;
  write_matrix_csv(os, x);
  std::istringstream is(os.str());
  const ObservationMatrix back = read_matrix_csv(is);
  REQUIRE(back.p == x.p);
  REQUIRE(back.n == x.n);
  for (std::size_t i = 0; i < x.values.size(); ++i) CHECK(back.values[i] == x.values[i]);
}

TEST_CASE("parse diagnostics carry line and field") {
  std::istringstream ragged("1,2,3\n4,5\n");
  try {
    read_matrix_csv(ragged);
    FAIL("expected CsvParseError");
  } catch (const CsvParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream bad("1,2\n3,x\n");
  try {
    read_matrix_csv(bad);
    FAIL("expected CsvParseError");
  } catch (const CsvParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 2);
  }

  std::istringstream empty("");
  CHECK_THROWS_AS(read_matrix_csv(empty), CsvParseError);
}

TEST_CASE("single cell and trailing newline round trips") {
  std::istringstream one("3.25\n");
  const ObservationMatrix x = read_matrix_csv(one);
  CHECK(x.p == 1);
  CHECK(x.n == 1);
  CHECK(x.values[0] == 3.25);
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "preproj/braid.hpp"
#include "preproj/oracle/oracle.hpp"
#include "preproj/silt2.hpp"
#include "preproj/weyl.hpp"

namespace preproj {

using Json = nlohmann::json;

enum class Format { Json, Dot, Text };

Format parse_format(std::string_view s);
std::string to_string(Format f);

struct Config {
  Family family = Family::A;
  int rank = 1;
  Labeling labeling = Labeling::Figure1;
  std::size_t cap = kDefaultEnumerationCap;
  std::string out;  // empty: stdout
  Format format = Format::Text;
  bool tilting = false;
  bool slow = false;

  // Throws ValidationError on cap < 1 or an impossible family/rank/labeling.
  void validate() const;
  DynkinGraph graph() const { return build_dynkin(family, rank, labeling); }
};

// {family, rank, labeling, edges: [[u, v]...], iota: [iota(1)...]}.
Json graph_json(const DynkinGraph& g);

/// One group element as {word, length, matrix}; matrix is a list of columns.
struct ElementRecord {
  Word word;
  int length = 0;
  std::vector<std::vector<std::int64_t>> matrix;

  friend bool operator==(const ElementRecord&, const ElementRecord&) = default;
};

ElementRecord element_record(const WeylGroup& group, std::size_t w);
Json to_json(const ElementRecord& e);
// Throws ValidationError if the object does not follow the schema.
ElementRecord element_from_json(const Json& j);

struct ClassifyReport {
  std::string type;
  Labeling labeling = Labeling::Figure1;
  std::size_t two_silt = 0;
  std::size_t two_tilt = 0;
  CoxeterType folded{Family::A, 1};
  std::vector<std::size_t> tilting;  // ascending group indices
};

ClassifyReport classify(const WeylGroup& group);
std::string classify_text(const ClassifyReport& r);
// Includes every element, with a tilting flag, in group order.
Json classify_json(const ClassifyReport& r, const WeylGroup& group);

Json hasse_json(const HasseQuiver& q);
std::string hasse_text(const HasseQuiver& q);

struct BraidReport {
  BraidWord word;
  GarsideNF normal_form;
  std::string rendered;
  std::size_t projection = 0;  // ambient index in W
};

BraidReport braid_report(const BraidGroup& braid, std::string_view text);
std::string braid_text(const BraidReport& r, const WeylGroup& group);
Json braid_json(const BraidReport& r, const BraidGroup& braid);

Json oracle_json(const oracle::OracleReport& r);
std::string oracle_text(const oracle::OracleReport& r);

}  // namespace preproj

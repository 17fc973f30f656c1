#include "rado/io.hpp"

#include <fstream>
#include <sstream>

#include "rado/errors.hpp"

namespace rado {

json pattern_to_json(const BlockPattern& pattern) {
  json blocks = json::array();
  for (const Block& b : pattern.blocks()) blocks.push_back({{"color", b.color}, {"len", b.length.str()}});
  return {{"r", pattern.r()}, {"blocks", std::move(blocks)}};
}

BlockPattern pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("blocks"))
    throw ParseError("pattern JSON needs keys \"r\" and \"blocks\"");
  if (!j["r"].is_number_integer()) throw ParseError("pattern \"r\" must be an integer: " + j["r"].dump());
  if (!j["blocks"].is_array()) throw ParseError("pattern \"blocks\" must be an array");
  const int r = j["r"].get<int>();
  std::vector<Block> blocks;
  for (const json& b : j["blocks"]) {
    if (!b.is_object() || !b.contains("color") || !b.contains("len"))
      throw ParseError("block needs \"color\" and \"len\": " + b.dump());
    if (!b["color"].is_number_integer() || b["color"].get<int>() < 0 || b["color"].get<int>() > 9)
      throw ParseError("bad block color: " + b["color"].dump());
    BigRational len;
    if (b["len"].is_string()) {
      try {
        len = BigRational::parse(b["len"].get<std::string>());
      } catch (const std::invalid_argument&) {
        throw ParseError("bad block length: " + b["len"].dump());
      }
    } else if (b["len"].is_number_integer()) {
      len = BigRational(b["len"].get<std::int64_t>());
    } else {
      throw ParseError("block length must be a fraction string: " + b["len"].dump());
    }
    blocks.push_back({static_cast<Color>(b["color"].get<int>()), len});
  }
  return BlockPattern(std::move(blocks), r);
}

BlockPattern parse_pattern(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("pattern is not valid JSON: ") + e.what());
  }
  return pattern_from_json(j);
}

json density_to_json(const BigRational& d) {
  json out = {{"fraction", d.str()}, {"decimal", d.decimal(10)}};
  if (!d.is_zero()) out["reciprocal"] = d.reciprocal().decimal(10);
  return out;
}

json to_json(const TripleCounts& c) { return {{"mono", c.mono}, {"nonmono", c.nonmono}, {"total", c.total}}; }

json to_json(const PairCategoryCounts& c) {
  return {{"divisible", c.divisible}, {"lower_cat", c.lower_cat},     {"upper_cat", c.upper_cat},
          {"sum", c.total()},         {"residue_red", c.residue_red}, {"residue_blue", c.residue_blue}};
}

json to_json(const DensityReport& d) {
  json per = json::array();
  for (const BigRational& p : d.per_color) per.push_back(p.str());
  return {{"coefficient", density_to_json(d.coefficient)}, {"per_color", std::move(per)}};
}

json to_json(const GreedyTrace& t) {
  json steps = json::array();
  for (const GreedyStep& s : t.steps) {
    json js = {{"step", s.step}, {"color", s.color}};
    js["t"] = s.t ? json(s.t->str()) : json(nullptr);
    js["density_after"] = s.density_after.str();
    js["accepted"] = s.accepted;
    steps.push_back(std::move(js));
  }
  json lengths = json::array();
  for (const BigRational& l : t.final_pattern.lengths()) lengths.push_back(l.str());
  return {{"a", t.a},
          {"r", t.r},
          {"selection", to_string(t.selection)},
          {"capped", t.capped},
          {"timed_out", t.timed_out},
          {"blocks", t.final_pattern.size()},
          {"colors", t.final_pattern.color_sequence()},
          {"lengths", std::move(lengths)},
          {"pattern", pattern_to_json(t.final_pattern)},
          {"density", density_to_json(t.final_density)},
          {"steps", std::move(steps)}};
}

json to_json(const SearchResult& s) {
  return {{"n", s.n},
          {"a", s.a},
          {"r", s.r},
          {"min_count", s.min_count},
          {"witness", s.witness.to_digits()},
          {"witness_rle", s.witness.to_rle()},
          {"exhaustive", s.exhaustive},
          {"explored", s.explored}};
}

json to_json(const BoundReport& b) {
  return {{"n", b.n},
          {"a", b.a},
          {"q", b.q_value},
          {"theorem3_rhs", b.theorem3_rhs.str()},
          {"mono", b.mono},
          {"total", b.total},
          {"corollary4_rhs", b.corollary4_rhs.str()},
          {"theorem3_strict", b.theorem3_strict},
          {"theorem3_satisfied", b.theorem3_satisfied},
          {"corollary4_strict", b.corollary4_strict},
          {"corollary4_satisfied", b.corollary4_satisfied},
          {"identity_holds", b.identity_holds}};
}

json to_json(const VerifySummary& v) {
  return {{"n", v.n},
          {"a", v.a},
          {"colorings", v.colorings},
          {"passed", v.passed()},
          {"failures",
           {{"count_identity", v.count_identity_failures},
            {"category_identity", v.category_identity_failures},
            {"residue_bound", v.residue_bound_failures},
            {"theorem3", v.theorem3_failures},
            {"corollary4", v.corollary4_failures},
            {"total_identity", v.total_identity_failures}}},
          {"worst_q_excess_per_n", v.worst_q_excess.str()},
          {"worst_mono_deficit_per_n", v.worst_mono_deficit.str()}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "n,min_count,min_over_n2\n";
  for (const ScanRow& row : rows) {
    const BigRational ratio(row.min_count, static_cast<std::int64_t>(row.n) * row.n);
    out += std::to_string(row.n) + "," + std::to_string(row.min_count) + "," + ratio.decimal(10) + "\n";
  }
  return out;
}

}  // namespace rado

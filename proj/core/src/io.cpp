#include "clusteralg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clusteralg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ExtendedExchangeMatrix parse_seed_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed seed file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("matrix")) {
    throw std::invalid_argument("seed file needs fields n, m, matrix");
  }
  int n, m;
  std::vector<std::vector<long>> entries;
  try {
    n = j.at("n").get<int>();
    m = j.at("m").get<int>();
    entries = j.at("matrix").get<std::vector<std::vector<long>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed seed file: ") + e.what());
  }
  return ExtendedExchangeMatrix(n, m, std::move(entries));
}

MutationWord parse_word_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed word file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("word")) {
    throw std::invalid_argument("word file needs field word");
  }
  std::vector<int> dirs;
  try {
    dirs = j.at("word").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed word file: ") + e.what());
  }
  return MutationWord(std::move(dirs));
}

ExtendedExchangeMatrix load_seed_file(const std::string& path) {
  return parse_seed_json(read_file(path));
}

MutationWord load_word_file(const std::string& path) {
  return parse_word_json(read_file(path));
}

std::string seed_to_json(const ExtendedExchangeMatrix& b) {
  nlohmann::json j;
  j["n"] = b.n_mutable();
  j["m"] = b.n_frozen();
  j["matrix"] = b.entries();
  return j.dump();
}

}  // namespace clusteralg

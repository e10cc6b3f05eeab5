/*
 * io.hpp
 * ------
 * File formats: seed files {"n": int, "m": int, "matrix": [[int,...],...]}
 * with (n+m) rows and n columns, and word files {"word": [int,...]} with
 * 1-based directions.
 */
#pragma once

#include <string>

#include "clusteralg/seed.hpp"

namespace clusteralg {

ExtendedExchangeMatrix load_seed_file(const std::string& path);
MutationWord load_word_file(const std::string& path);

ExtendedExchangeMatrix parse_seed_json(const std::string& text);
MutationWord parse_word_json(const std::string& text);

std::string seed_to_json(const ExtendedExchangeMatrix& b);

}  // namespace clusteralg

#ifndef BRAUER_IO_HPP
#define BRAUER_IO_HPP

#include <string>

#include "brauer/blocks.hpp"
#include "brauer/cell_module.hpp"
#include "brauer/graphs.hpp"
#include "brauer/kl.hpp"
#include "brauer/weight.hpp"

namespace brauer {

// Every writer is deterministic: collections come out in label order and
// JSON keys are sorted.  Readers throw ParseError.

std::string block_json(const BlockSet& block);
BlockSet parse_block_json(const std::string& text);

std::string facet_json(const Weight& lambda, long delta);
std::string facet_text(const Weight& lambda, long delta);

std::string graph_json(const ColouredDigraph& g);
ColouredDigraph parse_graph_json(const std::string& text);
std::string graph_dot(const ColouredDigraph& g);
std::string graph_text(const ColouredDigraph& g);

/// Square table in label order: blank above the diagonal, "." for zero.
std::string kl_table_csv(const KLTable& table);
/// Rebuilds weights and rows; delta and the degree bound are not in the CSV.
KLTable parse_kl_table_csv(const std::string& text, long delta);
std::string kl_table_json(const KLTable& table);
KLTable parse_kl_table_json(const std::string& text);
std::string kl_table_text(const KLTable& table);

std::string gram_csv(const GramMatrix& g);
GramMatrix parse_gram_csv(const std::string& text, const mpq_class& delta);

std::string verify_json(const VerifyReport& report);

}  // namespace brauer

#endif  // BRAUER_IO_HPP

#pragma once

#include <iosfwd>
#include <string>

#include "hlbench/coloring.h"
#include "hlbench/ideals.h"
#include "hlbench/katetov.h"
#include "hlbench/level_tree.h"

// Versioned line-oriented text formats. Every reader accepts blank lines and
// '#' comment lines after the header and reports problems as Errc::kParse
// with a 1-based line number. The empty string is written as "-".
//
//   tree v1 depth=<D>          one node per line; must be a valid tree
//   coloring v1 depth=<D>      "<node> <0|1>" per line; missing nodes are 0
//   natset v1 bound=<N>        one natural per line
//   gridset v1 bound=<N>       "<col> <row>" per line
//   nodeset v1 depth=<D>       one node per line
//   ideal v1 ground=<interval|grid|nodes> bound=<N|D> surrogate=<name>
//            params=<k=v,...>  then blocks "gen <label>" followed by points
//   morphism v1                then "formula=<name>" or "<y> -> <x>" lines
namespace hlbench {

LevelTree read_tree(std::istream& in);
void write_tree(std::ostream& out, const LevelTree& t);

Coloring read_coloring(std::istream& in);
// Errc::kRange if the coloring has more than kMaxMaterializedNodes nodes.
void write_coloring(std::ostream& out, const Coloring& c);

NatSet read_natset(std::istream& in);
void write_natset(std::ostream& out, const NatSet& a);

GridSet read_gridset(std::istream& in);
void write_gridset(std::ostream& out, const GridSet& e);

NodeSet read_nodeset(std::istream& in);
void write_nodeset(std::ostream& out, const NodeSet& a);

FiniteIdealPresentation read_presentation(std::istream& in);
void write_presentation(std::ostream& out, const FiniteIdealPresentation& p);

// Table entries are decoded against the two grounds.
MorphismSpec read_morphism(std::istream& in, const Ground& target, const Ground& source);
void write_morphism(std::ostream& out, const MorphismSpec& f, const Ground& target, const Ground& source);

// Convenience: open a file and dispatch to the reader; Errc::kNotFound if the
// file cannot be opened.
LevelTree load_tree(const std::string& path);
Coloring load_coloring(const std::string& path);
NatSet load_natset(const std::string& path);
GridSet load_gridset(const std::string& path);
NodeSet load_nodeset(const std::string& path);
FiniteIdealPresentation load_presentation(const std::string& path);
MorphismSpec load_morphism(const std::string& path, const Ground& target, const Ground& source);

}  // namespace hlbench

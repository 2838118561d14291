#pragma once

// The gkc command line: build, split, compact, verify, witness, export and
// sporadic verbs over group descriptors or graph files.

#include "gkc/graph.hpp"
#include "gkc/groups.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gkc::cli {

enum Exit : int { Ok = 0, Refuted = 1, Error = 2, BudgetExceeded = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class GraphKind { Prime, Solvable, Compact };

/// The requested graph of a group. Throws std::invalid_argument when the
/// library has no construction for it.
Graph group_graph(const GroupDescriptor& g, GraphKind kind);

struct CampaignLine {
    std::string subject;
    bool pass = false;
    std::string detail;
};

/// Runs the tasks on a worker pool; the result order is the task order.
std::vector<CampaignLine> run_campaign(const std::vector<std::string>& subjects,
                                       CampaignLine (*task)(const std::string&), unsigned threads = 0);

std::vector<CampaignLine> campaign_theorem_a(unsigned max_n);
std::vector<CampaignLine> campaign_theorem_b();
std::vector<CampaignLine> campaign_theorem_c();
std::vector<CampaignLine> campaign_theorem_d(const std::vector<std::string>& descriptors);

/// Descriptors sampled by the theorem-c campaign.
std::vector<std::string> exceptional_sample();
std::vector<std::string> classical_sample();

}  // namespace gkc::cli

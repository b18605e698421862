#include "cliquemine/fpgrowth.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "cliquemine/io.hpp"

namespace cliquemine {

Item ItemCatalog::intern(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it != index_.end()) return Item{it->second};
  auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return Item{id};
}

std::optional<Item> ItemCatalog::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Item{it->second};
}

const std::string& ItemCatalog::name(Item item) const {
  if (item.id >= names_.size()) throw std::out_of_range("item id outside catalog");
  return names_[item.id];
}

void TransactionDB::add_transaction(std::vector<Item> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  for (Item it : items) {
    if (it.id >= item_counts.size()) item_counts.resize(it.id + 1, 0);
    ++item_counts[it.id];
  }
  transactions.push_back(std::move(items));
}

namespace {

bool meets_support(std::int64_t count, std::size_t db_size, double min_support) {
  if (db_size == 0) return false;
  return static_cast<double>(count) / static_cast<double>(db_size) >= min_support;
}

void check_min_support(double min_support) {
  if (!(min_support > 0.0 && min_support <= 1.0))
    throw std::invalid_argument("min_support must lie in (0, 1]");
}

}  // namespace

FPTree FPTree::build(const TransactionDB& db, double min_support, const ItemCatalog& catalog) {
  check_min_support(min_support);
  FPTree tree;
  tree.db_size_ = db.size();
  tree.min_support_ = min_support;
  tree.catalog_ = &catalog;
  tree.nodes_.push_back(Node{});  // root

  // pass 1: survivors, in global descending-frequency order (ties by name)
  std::vector<Item> retained;
  for (std::uint32_t id = 0; id < db.item_counts.size(); ++id)
    if (meets_support(db.item_counts[id], db.size(), min_support)) retained.push_back(Item{id});
  std::sort(retained.begin(), retained.end(), [&](Item a, Item b) {
    if (db.item_counts[a.id] != db.item_counts[b.id])
      return db.item_counts[a.id] > db.item_counts[b.id];
    return catalog.name(a) < catalog.name(b);
  });
  tree.retained_ = retained;

  std::unordered_map<std::uint32_t, std::size_t> rank;
  for (std::size_t i = 0; i < retained.size(); ++i) rank.emplace(retained[i].id, i);

  // pass 2: insert each transaction's surviving items in global order
  std::vector<Item> filtered;
  for (const auto& txn : db.transactions) {
    filtered.clear();
    for (Item it : txn)
      if (rank.count(it.id)) filtered.push_back(it);
    std::sort(filtered.begin(), filtered.end(),
              [&](Item a, Item b) { return rank.at(a.id) < rank.at(b.id); });

    std::int32_t cur = 0;
    for (Item it : filtered) {
      std::int32_t child = -1;
      for (std::int32_t c : tree.nodes_[cur].children)
        if (tree.nodes_[c].item == it) {
          child = c;
          break;
        }
      if (child < 0) {
        child = static_cast<std::int32_t>(tree.nodes_.size());
        tree.nodes_.push_back(Node{it, 0, cur, {}});
        tree.nodes_[cur].children.push_back(child);
        tree.headers_[it.id].push_back(child);
      }
      ++tree.nodes_[child].count;
      cur = child;
    }
  }
  return tree;
}

std::span<const std::int32_t> FPTree::header_chain(Item item) const {
  auto it = headers_.find(item.id);
  if (it == headers_.end()) return {};
  return it->second;
}

std::int64_t FPTree::header_count(Item item) const {
  std::int64_t total = 0;
  for (std::int32_t idx : header_chain(item)) total += nodes_[idx].count;
  return total;
}

namespace {

// Conditional pattern structures reuse the FP-tree shape over weighted rows.
struct CondNode {
  Item item{};
  std::int64_t count = 0;
  std::int32_t parent = -1;
  std::vector<std::int32_t> children;
};

struct CondTree {
  std::vector<CondNode> nodes;                                     // [0] is root
  std::vector<Item> items_ascending;                               // by conditional count, least first
  std::unordered_map<std::uint32_t, std::vector<std::int32_t>> headers;
};

struct WeightedRow {
  std::vector<Item> items;  // in global order already
  std::int64_t weight = 0;
};

CondTree build_cond_tree(const std::vector<WeightedRow>& rows, std::size_t db_size,
                         double min_support, const ItemCatalog& catalog) {
  std::unordered_map<std::uint32_t, std::int64_t> counts;
  for (const auto& row : rows)
    for (Item it : row.items) counts[it.id] += row.weight;

  std::vector<Item> retained;
  for (const auto& [id, c] : counts)
    if (meets_support(c, db_size, min_support)) retained.push_back(Item{id});
  std::sort(retained.begin(), retained.end(), [&](Item a, Item b) {
    if (counts[a.id] != counts[b.id]) return counts[a.id] > counts[b.id];
    return catalog.name(a) < catalog.name(b);
  });

  std::unordered_map<std::uint32_t, std::size_t> rank;
  for (std::size_t i = 0; i < retained.size(); ++i) rank.emplace(retained[i].id, i);

  CondTree tree;
  tree.nodes.push_back(CondNode{});
  tree.items_ascending.assign(retained.rbegin(), retained.rend());

  std::vector<Item> filtered;
  for (const auto& row : rows) {
    filtered.clear();
    for (Item it : row.items)
      if (rank.count(it.id)) filtered.push_back(it);
    std::sort(filtered.begin(), filtered.end(),
              [&](Item a, Item b) { return rank.at(a.id) < rank.at(b.id); });
    std::int32_t cur = 0;
    for (Item it : filtered) {
      std::int32_t child = -1;
      for (std::int32_t c : tree.nodes[cur].children)
        if (tree.nodes[c].item == it) {
          child = c;
          break;
        }
      if (child < 0) {
        child = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.push_back(CondNode{it, 0, cur, {}});
        tree.nodes[cur].children.push_back(child);
        tree.headers[it.id].push_back(child);
      }
      tree.nodes[child].count += row.weight;
      cur = child;
    }
  }
  return tree;
}

void mine_cond(const CondTree& tree, std::size_t db_size, double min_support,
               const ItemCatalog& catalog, std::vector<Item>& suffix,
               std::vector<FrequentItemset>& out) {
  for (Item a : tree.items_ascending) {
    std::int64_t count_a = 0;
    const auto& chain = tree.headers.at(a.id);
    for (std::int32_t idx : chain) count_a += tree.nodes[idx].count;

    suffix.push_back(a);
    FrequentItemset fs;
    fs.items = suffix;
    std::sort(fs.items.begin(), fs.items.end());
    fs.support_count = count_a;
    fs.support = static_cast<double>(count_a) / static_cast<double>(db_size);
    out.push_back(std::move(fs));

    // conditional pattern base: root paths above each occurrence of a
    std::vector<WeightedRow> base;
    for (std::int32_t idx : chain) {
      WeightedRow row;
      row.weight = tree.nodes[idx].count;
      for (std::int32_t p = tree.nodes[idx].parent; p > 0; p = tree.nodes[p].parent)
        row.items.push_back(tree.nodes[p].item);
      std::reverse(row.items.begin(), row.items.end());
      if (!row.items.empty()) base.push_back(std::move(row));
    }
    if (!base.empty()) {
      CondTree cond = build_cond_tree(base, db_size, min_support, catalog);
      mine_cond(cond, db_size, min_support, catalog, suffix, out);
    }
    suffix.pop_back();
  }
}

}  // namespace

std::vector<FrequentItemset> mine_frequent_itemsets(const FPTree& tree, double min_support) {
  check_min_support(min_support);
  if (min_support != tree.min_support_)
    throw std::invalid_argument("min_support does not match the tree's build threshold");
  std::vector<FrequentItemset> out;
  if (tree.db_size_ == 0 || tree.retained_.empty()) return out;

  const ItemCatalog& catalog = *tree.catalog_;

  // wrap the built tree as a conditional tree over its own retained items
  CondTree root;
  root.nodes.reserve(tree.nodes_.size());
  for (const auto& n : tree.nodes_) root.nodes.push_back(CondNode{n.item, n.count, n.parent, n.children});
  root.items_ascending.assign(tree.retained_.rbegin(), tree.retained_.rend());
  for (Item it : tree.retained_) {
    auto chain = tree.header_chain(it);
    root.headers[it.id].assign(chain.begin(), chain.end());
  }

  std::vector<Item> suffix;
  mine_cond(root, tree.db_size_, min_support, catalog, suffix, out);

  std::sort(out.begin(), out.end(), [&](const FrequentItemset& a, const FrequentItemset& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    for (std::size_t i = 0; i < a.items.size(); ++i) {
      const auto& na = catalog.name(a.items[i]);
      const auto& nb = catalog.name(b.items[i]);
      if (na != nb) return na < nb;
    }
    return false;
  });
  return out;
}

std::vector<FrequentItemset> fp_growth(const TransactionDB& db, double min_support,
                                       const ItemCatalog& catalog) {
  return mine_frequent_itemsets(FPTree::build(db, min_support, catalog), min_support);
}

namespace {

struct ItemsetKeyHash {
  std::size_t operator()(const std::vector<Item>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Item it : v) {
      h ^= it.id;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> itemsets,
                                            std::size_t db_size, double min_confidence,
                                            std::span<const Item> consequent_filter,
                                            const ItemCatalog& catalog) {
  (void)catalog;
  if (!(min_confidence > 0.0 && min_confidence <= 1.0))
    throw std::invalid_argument("min_confidence must lie in (0, 1]");
  if (db_size == 0) return {};

  std::unordered_map<std::vector<Item>, std::int64_t, ItemsetKeyHash> support_of;
  support_of.reserve(itemsets.size());
  for (const auto& fs : itemsets) support_of.emplace(fs.items, fs.support_count);

  auto is_consequent = [&](Item it) {
    return std::find(consequent_filter.begin(), consequent_filter.end(), it) !=
           consequent_filter.end();
  };

  std::vector<AssociationRule> rules;
  std::vector<Item> antecedent;
  for (const auto& fs : itemsets) {
    if (fs.items.size() < 2) continue;
    for (Item y : fs.items) {
      if (!is_consequent(y)) continue;
      antecedent.clear();
      bool clean = true;
      for (Item it : fs.items) {
        if (it == y) continue;
        if (is_consequent(it)) {
          clean = false;
          break;
        }
        antecedent.push_back(it);
      }
      if (!clean || antecedent.empty()) continue;

      auto x_it = support_of.find(antecedent);
      auto y_it = support_of.find(std::vector<Item>{y});
      if (x_it == support_of.end() || y_it == support_of.end())
        throw std::logic_error("itemset list is not closed under subsets");

      const double conf =
          static_cast<double>(fs.support_count) / static_cast<double>(x_it->second);
      if (conf < min_confidence) continue;

      AssociationRule r;
      r.antecedent = antecedent;
      r.consequent = {y};
      r.support_count = fs.support_count;
      r.support = static_cast<double>(fs.support_count) / static_cast<double>(db_size);
      r.confidence = conf;
      r.lift = conf / (static_cast<double>(y_it->second) / static_cast<double>(db_size));
      rules.push_back(std::move(r));
    }
  }
  return rules;
}

std::string antecedent_text(const AssociationRule& rule, const ItemCatalog& catalog) {
  std::vector<std::string_view> names;
  names.reserve(rule.antecedent.size());
  for (Item it : rule.antecedent) names.push_back(catalog.name(it));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " AND ";
    out += names[i];
  }
  return out;
}

void write_rules_csv(std::span<const AssociationRule> rules, const ItemCatalog& catalog,
                     std::ostream& out) {
  out << "antecedents,consequents,support,confidence,lift\n";
  for (const auto& r : rules) {
    out << antecedent_text(r, catalog) << ',';
    for (std::size_t i = 0; i < r.consequent.size(); ++i) {
      if (i) out << " AND ";
      out << catalog.name(r.consequent[i]);
    }
    out << ',' << format_double(r.support) << ',' << format_double(r.confidence) << ','
        << format_double(r.lift) << '\n';
  }
}

}  // namespace cliquemine

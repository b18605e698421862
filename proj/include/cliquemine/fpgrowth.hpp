#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cliquemine {

// Interned symbol; equality is id equality within one catalog.
struct Item {
  std::uint32_t id = 0;
  friend bool operator==(Item, Item) = default;
  friend auto operator<=>(Item, Item) = default;
};

class ItemCatalog {
 public:
  Item intern(std::string_view name);
  std::optional<Item> find(std::string_view name) const;
  const std::string& name(Item item) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

struct TransactionDB {
  std::vector<std::vector<Item>> transactions;  // each sorted by id, no duplicates
  std::vector<std::int64_t> item_counts;        // indexed by item id

  std::size_t size() const { return transactions.size(); }
  // Sorts, deduplicates, and records the transaction.
  void add_transaction(std::vector<Item> items);
};

// Frequency-ordered prefix tree with per-item header chains.
class FPTree {
 public:
  struct Node {
    Item item{};               // meaningless for the root
    std::int64_t count = 0;
    std::int32_t parent = -1;  // node index; root has -1
    std::vector<std::int32_t> children;
  };

  // Two passes: count supports and prune items with support < min_support,
  // then insert transactions in global descending-frequency order (frequency
  // ties broken by item name). Empty databases give an empty tree.
  static FPTree build(const TransactionDB& db, double min_support, const ItemCatalog& catalog);

  const std::vector<Node>& nodes() const { return nodes_; }  // nodes_[0] is the root
  const std::vector<Item>& retained_items() const { return retained_; }  // most frequent first
  std::span<const std::int32_t> header_chain(Item item) const;  // insertion order
  std::int64_t header_count(Item item) const;                   // sum of chain counts

  std::size_t db_size() const { return db_size_; }
  double min_support() const { return min_support_; }

 private:
  friend std::vector<struct FrequentItemset> mine_frequent_itemsets(const FPTree&, double);
  std::vector<Node> nodes_;
  std::vector<Item> retained_;
  std::unordered_map<std::uint32_t, std::vector<std::int32_t>> headers_;
  std::size_t db_size_ = 0;
  double min_support_ = 0.0;
  const ItemCatalog* catalog_ = nullptr;
};

struct FrequentItemset {
  std::vector<Item> items;  // sorted by id
  std::int64_t support_count = 0;
  double support = 0.0;
};

// Complete frequent-itemset mining by recursive conditional trees. Output is
// canonical: ascending size, then lexicographic by item names.
std::vector<FrequentItemset> mine_frequent_itemsets(const FPTree& tree, double min_support);

// build + mine
std::vector<FrequentItemset> fp_growth(const TransactionDB& db, double min_support,
                                       const ItemCatalog& catalog);

struct AssociationRule {
  std::vector<Item> antecedent;  // sorted by id; never contains a consequent item
  std::vector<Item> consequent;  // singleton
  std::int64_t support_count = 0;
  double support = 0.0;     // P(X and Y)
  double confidence = 0.0;  // P(Y | X)
  double lift = 0.0;        // confidence / P(Y)
};

// Emits X -> {y} for every frequent itemset Z, y in Z intersect
// consequent_filter, X = Z \ {y} nonempty and filter-free, keeping rules with
// confidence >= min_confidence. Requires the itemset list to be closed under
// subsets (which the miner guarantees).
std::vector<AssociationRule> generate_rules(std::span<const FrequentItemset> itemsets,
                                            std::size_t db_size, double min_confidence,
                                            std::span<const Item> consequent_filter,
                                            const ItemCatalog& catalog);

// Item names joined by " AND " in lexicographic order.
std::string antecedent_text(const AssociationRule& rule, const ItemCatalog& catalog);

// CSV: antecedents,consequents,support,confidence,lift
void write_rules_csv(std::span<const AssociationRule> rules, const ItemCatalog& catalog,
                     std::ostream& out);

}  // namespace cliquemine

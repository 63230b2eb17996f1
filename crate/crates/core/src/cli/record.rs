//! Line-oriented nested key/value records for the structured output format.
//!
//! A record renders one line per leaf as `dotted.path=value`, with list
//! entries addressed by index, e.g. `rows.0.2=-1`. Field order follows
//! insertion order, so renderings are byte-deterministic.

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Leaf(String),
    List(Vec<Node>),
    Map(Vec<(String, Node)>),
}

impl Node {
    pub fn leaf(value: impl ToString) -> Node {
        Node::Leaf(value.to_string())
    }

    pub fn list<I: IntoIterator<Item = Node>>(items: I) -> Node {
        Node::List(items.into_iter().collect())
    }

    pub fn leaf_list<I: IntoIterator<Item = T>, T: ToString>(items: I) -> Node {
        Node::List(items.into_iter().map(Node::leaf).collect())
    }
}

/// The root of a structured report; an ordered key/value map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, Node)>,
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    pub fn set(&mut self, key: &str, node: Node) -> &mut Record {
        self.fields.push((key.to_string(), node));
        self
    }

    pub fn leaf(&mut self, key: &str, value: impl ToString) -> &mut Record {
        self.set(key, Node::leaf(value))
    }

    pub fn into_node(self) -> Node {
        Node::Map(self.fields)
    }

    /// All `(path, value)` leaves in rendering order.
    pub fn leaves(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        fn walk(prefix: &str, node: &Node, out: &mut Vec<(String, String)>) {
            match node {
                Node::Leaf(v) => out.push((prefix.to_string(), v.clone())),
                Node::List(items) => {
                    for (i, item) in items.iter().enumerate() {
                        walk(&format!("{prefix}.{i}"), item, out);
                    }
                }
                Node::Map(fields) => {
                    for (k, v) in fields {
                        walk(&format!("{prefix}.{k}"), v, out);
                    }
                }
            }
        }
        for (k, v) in &self.fields {
            walk(k, v, &mut out);
        }
        out
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (path, value) in self.leaves() {
            out.push_str(&path);
            out.push('=');
            out.push_str(&value);
            out.push('\n');
        }
        out
    }
}

# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the pickle and Planetoid fixtures under tests/data."""

import collections
import os
import pickle

import numpy as np
import scipy.sparse as sp

HERE = os.path.dirname(os.path.abspath(__file__))


def dump(obj, path, protocol):
  with open(path, "wb") as f:
    pickle.dump(obj, f, protocol=protocol)


def pickles():
  out = os.path.join(HERE, "pickle")
  os.makedirs(out, exist_ok=True)
  plain = {"a": [1, -2, 3], "b": (1.5, None, True), "c": "text"}
  dense = np.arange(6, dtype=np.float32).reshape(2, 3)
  ints = np.array([3, -1, 7], dtype=np.int64)
  csr = sp.csr_matrix(np.array([[0, 2.0, 0], [1.0, 0, 3.0]]))
  big = np.array([2**40, -5], dtype=np.int64)
  for protocol in (0, 2, 4):
    dump(plain, os.path.join(out, "plain_p%d.pkl" % protocol), protocol)
    dump(dense, os.path.join(out, "dense_p%d.pkl" % protocol), protocol)
    dump(ints, os.path.join(out, "ints_p%d.pkl" % protocol), protocol)
    dump(csr, os.path.join(out, "csr_p%d.pkl" % protocol), protocol)
  dump(big, os.path.join(out, "big_p2.pkl"), 2)
  graph = collections.defaultdict(list)
  graph[0] = [1, 2]
  graph[2] = [0]
  dump(graph, os.path.join(out, "graph_p2.pkl"), 2)


def planetoid():
  """A 520-node dataset with one test index missing, like Citeseer."""
  out = os.path.join(HERE, "planetoid")
  os.makedirs(out, exist_ok=True)
  d, k, n_all = 5, 3, 510
  allx = np.zeros((n_all, d), dtype=np.float32)
  ally = np.zeros((n_all, k), dtype=np.int64)
  for i in range(n_all):
    allx[i, i % d] = 1 + i
    ally[i, i % k] = 1
  test_index = [515, 510, 519, 511, 517, 513, 512, 518, 516]
  tx = np.zeros((len(test_index), d), dtype=np.float32)
  ty = np.zeros((len(test_index), k), dtype=np.int64)
  for r in range(len(test_index)):
    tx[r, r % d] = 1000 + r
    ty[r, (r + 1) % k] = 1
  graph = collections.defaultdict(list)
  for i in range(520):
    if i != 514:
      graph[i].append((i + 1) % 520)
  graph[514] = []
  arrays = {
      "x": sp.csr_matrix(allx[:3]),
      "y": ally[:3],
      "tx": sp.csr_matrix(tx),
      "ty": ty,
      "allx": sp.csr_matrix(allx),
      "ally": ally,
      "graph": graph,
  }
  for part, value in arrays.items():
    dump(value, os.path.join(out, "ind.tiny." + part), 2)
  with open(os.path.join(out, "ind.tiny.test.index"), "w") as f:
    f.write("\n".join(str(i) for i in test_index) + "\n")


if __name__ == "__main__":
  pickles()
  planetoid()

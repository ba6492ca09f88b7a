# Copyright 2024 Xanadu Quantum Technologies Inc.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Plotting
========

.. currentmodule:: pennylane_sqbath.plotting

SVG line plots of the tables produced by the command line interface.
The Agg backend is selected so that no display is needed, and the SVG
output carries no date and a fixed hash salt so that identical tables
give identical files.
"""
import logging

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # pylint: disable=wrong-import-position

log = logging.getLogger(__name__)

matplotlib.rcParams["svg.hashsalt"] = "pennylane-sqbath"
matplotlib.rcParams["font.size"] = 9


def plot_columns(rows, header, x, columns, path, group=None):
    """Save one panel per measure column as an SVG figure.

    Args:
        rows (Sequence[Sequence[float]]): table rows
        header (Sequence[str]): column names of ``rows``
        x (str): name of the column used as abscissa
        columns (Sequence[str]): names of the columns to plot
        path (str): output file
        group (str): optional column whose distinct values are drawn as separate lines
    """
    index = {name: k for k, name in enumerate(header)}
    groups = {}
    for row in rows:
        key = row[index[group]] if group else None
        groups.setdefault(key, []).append(row)

    fig, axes = plt.subplots(len(columns), 1, sharex=True, figsize=(5, 1.6 * len(columns)))
    axes = [axes] if len(columns) == 1 else list(axes)
    for ax, column in zip(axes, columns):
        for key, members in groups.items():
            label = "{} = {:g}".format(group, key) if group else None
            ax.plot(
                [r[index[x]] for r in members], [r[index[column]] for r in members], label=label
            )
        ax.set_ylabel(column)
        if group:
            ax.legend(fontsize=7)
    axes[-1].set_xlabel(x)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    log.info("Wrote %s", path)

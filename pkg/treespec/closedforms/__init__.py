# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import string

import numpy as np

from errors import DomainError, StateError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
NORM_TOL = 1e-12
PSD_TOL = 1e-10
ISOMETRY_TOL = 1e-10
RANK_TOL = 1e-12


def _check_layout(dims, labels, size):
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise StateError("Subsystem dimensions must be positive, got {}".format(dims))
    if int(np.prod(dims)) != size:
        raise StateError("Dimensions {} do not multiply to {}".format(dims, size))
    if labels is None:
        labels = ["S{}".format(k) for k in range(len(dims))]
    labels = tuple(str(label) for label in labels)
    if len(labels) != len(dims):
        raise StateError("Expected {} labels, got {}".format(len(dims), len(labels)))
    if len(set(labels)) != len(labels):
        raise StateError("Subsystem labels must be distinct: {}".format(labels))
    return dims, labels


class _Labeled(object):
    """Label bookkeeping shared by density operators and state vectors"""

    @property
    def dims(self):
        return self._dims

    @property
    def labels(self):
        return self._labels

    @property
    def dim(self):
        return int(np.prod(self._dims))

    def index(self, label):
        try:
            return self._labels.index(str(label))
        except ValueError:
            raise DomainError("Unknown subsystem '{}'".format(label))

    def indices(self, labels):
        idx = [self.index(label) for label in labels]
        if len(set(idx)) != len(idx):
            raise DomainError("Repeated subsystems in {}".format(list(labels)))
        return idx

    def dim_of(self, labels):
        return int(np.prod([self._dims[k] for k in self.indices(labels)]))


class DensityOperator(_Labeled):
    """Density matrix over labeled tensor factors; immutable"""

    def __init__(self, matrix, dims=None, labels=None, validate=True):
        matrix = np.array(matrix, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise StateError("Density matrix must be square, got shape {}".format(matrix.shape))
        if dims is None:
            dims = (matrix.shape[0],)
        self._dims, self._labels = _check_layout(dims, labels, matrix.shape[0])
        if validate:
            if np.max(np.abs(matrix - matrix.conj().T)) > HERMITIAN_TOL * max(1.0, np.max(np.abs(matrix))):
                raise StateError("Density matrix is not Hermitian")
            tr = np.trace(matrix).real
            if abs(tr - 1.0) > TRACE_TOL * matrix.shape[0]:
                raise StateError("Density matrix trace is {!r}, expected 1".format(tr))
        matrix = 0.5 * (matrix + matrix.conj().T)
        if validate:
            low = np.linalg.eigvalsh(matrix)[0]
            if low < -PSD_TOL:
                raise StateError("Density matrix has negative eigenvalue {:.3g}".format(low))
        matrix.setflags(write=False)
        self._matrix = matrix

    @property
    def matrix(self):
        return self._matrix

    def eigenvalues(self):
        return np.linalg.eigvalsh(self._matrix)

    def relabel(self, labels):
        return DensityOperator(self._matrix, self._dims, labels, validate=False)

    def to_density(self):
        return self

    def __repr__(self):
        return "DensityOperator({})".format(", ".join(
            "{}:{}".format(l, d) for l, d in zip(self._labels, self._dims)))


class PureStateVector(_Labeled):
    """Unit vector over labeled tensor factors; immutable"""

    def __init__(self, amplitudes, dims=None, labels=None, validate=True):
        vec = np.array(amplitudes, dtype=complex).reshape(-1)
        if dims is None:
            dims = (vec.shape[0],)
        self._dims, self._labels = _check_layout(dims, labels, vec.shape[0])
        norm = np.linalg.norm(vec)
        if validate and abs(norm - 1.0) > NORM_TOL * max(1, np.sqrt(vec.shape[0])):
            raise StateError("State vector norm is {!r}, expected 1".format(norm))
        vec = vec / norm
        vec.setflags(write=False)
        self._vec = vec

    @property
    def amplitudes(self):
        return self._vec

    def relabel(self, labels):
        return PureStateVector(self._vec, self._dims, labels, validate=False)

    def to_density(self):
        return DensityOperator(np.outer(self._vec, self._vec.conj()), self._dims, self._labels,
                               validate=False)

    def marginal_matrix(self, keep_labels):
        """rho on `keep_labels` as M M^dag, M the amplitude tensor regrouped keep x rest"""
        keep = self.indices(keep_labels)
        rest = [k for k in range(len(self._dims)) if k not in keep]
        t = self._vec.reshape(self._dims).transpose(keep + rest)
        m = t.reshape(int(np.prod([self._dims[k] for k in keep])), -1)
        return m @ m.conj().T

    def schmidt_probabilities(self, keep_labels):
        """Eigenvalues of the marginal on `keep_labels` from a singular value decomposition"""
        keep = self.indices(keep_labels)
        rest = [k for k in range(len(self._dims)) if k not in keep]
        t = self._vec.reshape(self._dims).transpose(keep + rest)
        m = t.reshape(int(np.prod([self._dims[k] for k in keep])), -1)
        return np.linalg.svd(m, compute_uv=False) ** 2

    def __repr__(self):
        return "PureStateVector({})".format(", ".join(
            "{}:{}".format(l, d) for l, d in zip(self._labels, self._dims)))


def as_density(state):
    if isinstance(state, (DensityOperator, PureStateVector)):
        return state.to_density()
    raise DomainError("Expected a DensityOperator or PureStateVector, got {}".format(
        type(state).__name__))


def partial_trace(state, keep_labels):
    """Reduced state on `keep_labels`, in the order given"""
    keep_labels = list(keep_labels)
    if not keep_labels:
        raise DomainError("partial_trace needs at least one subsystem to keep")
    keep = state.indices(keep_labels)
    dims = [state.dims[k] for k in keep]
    if isinstance(state, PureStateVector):
        return DensityOperator(state.marginal_matrix(keep_labels), dims, keep_labels, validate=False)

    n = len(state.dims)
    if n > len(string.ascii_letters) // 2:
        raise DomainError("Too many subsystems ({}) for partial_trace".format(n))
    rows = string.ascii_letters[:n]
    cols = [rows[k] if k not in keep else string.ascii_letters[n + k] for k in range(n)]
    subscripts = "{}{}->{}{}".format(rows, "".join(cols), "".join(rows[k] for k in keep),
                                    "".join(cols[k] for k in keep))
    t = state.matrix.reshape(state.dims + state.dims)
    d = int(np.prod(dims))
    return DensityOperator(np.einsum(subscripts, t).reshape(d, d), dims, keep_labels, validate=False)


def tensor(*states):
    """Tensor product; pure factors stay pure"""
    if not states:
        raise DomainError("tensor needs at least one state")
    labels = sum((s.labels for s in states), ())
    if len(set(labels)) != len(labels):
        raise DomainError("Label collision in tensor product: {}".format(labels))
    dims = sum((s.dims for s in states), ())
    if all(isinstance(s, PureStateVector) for s in states):
        vec = states[0].amplitudes
        for s in states[1:]:
            vec = np.kron(vec, s.amplitudes)
        return PureStateVector(vec, dims, labels, validate=False)
    mat = as_density(states[0]).matrix
    for s in states[1:]:
        mat = np.kron(mat, as_density(s).matrix)
    return DensityOperator(mat, dims, labels, validate=False)


def permute(state, labels):
    """Reorder the tensor factors so that they follow `labels`"""
    order = state.indices(labels)
    if len(order) != len(state.dims):
        raise DomainError("permute needs every subsystem exactly once")
    dims = tuple(state.dims[k] for k in order)
    if isinstance(state, PureStateVector):
        vec = state.amplitudes.reshape(state.dims).transpose(order).reshape(-1)
        return PureStateVector(vec, dims, labels, validate=False)
    n = len(order)
    t = state.matrix.reshape(state.dims + state.dims).transpose(order + [n + k for k in order])
    return DensityOperator(t.reshape(state.dim, state.dim), dims, labels, validate=False)


def purify(rho, reference_label="R"):
    """
    Purification with the reference system last. The reference dimension is
    the rank of rho (eigenvalues below 1e-12 are dropped).
    """
    rho = as_density(rho)
    if reference_label in rho.labels:
        raise DomainError("Reference label '{}' already in use".format(reference_label))
    w, v = np.linalg.eigh(rho.matrix)
    keep = w > RANK_TOL
    w, v = w[keep], v[:, keep]
    rank = w.shape[0]
    # sum_i sqrt(p_i) |phi_i>_sys |i>_R
    vec = (v * np.sqrt(w)).reshape(-1)
    return PureStateVector(vec, rho.dims + (rank,), rho.labels + (reference_label,))


def check_isometry(isometry, tol=ISOMETRY_TOL):
    isometry = np.asarray(isometry, dtype=complex)
    if isometry.ndim != 2 or isometry.shape[0] < isometry.shape[1]:
        raise StateError("Isometry must be a tall matrix, got shape {}".format(isometry.shape))
    err = np.max(np.abs(isometry.conj().T @ isometry - np.eye(isometry.shape[1])))
    if err > tol:
        raise StateError("Map is not an isometry (defect {:.3g})".format(err))
    return isometry


def apply_isometry(state, isometry, target_labels, output_labels=None, output_dims=None):
    """
    Conjugate the `target_labels` factors by an isometry. The output factors
    (default: a single factor named after the first target) take the place
    of the targets at the front, the untouched factors follow in order.
    """
    isometry = check_isometry(isometry)
    target_labels = list(target_labels)
    targets = state.indices(target_labels)
    d_in = int(np.prod([state.dims[k] for k in targets]))
    if isometry.shape[1] != d_in:
        raise DomainError("Isometry takes dimension {}, targets have {}".format(isometry.shape[1], d_in))
    if output_labels is None:
        output_labels = [target_labels[0]]
        output_dims = [isometry.shape[0]]
    output_labels = list(output_labels)
    if output_dims is None:
        if len(output_labels) != 1:
            raise DomainError("output_dims required for several output subsystems")
        output_dims = [isometry.shape[0]]
    if int(np.prod(output_dims)) != isometry.shape[0]:
        raise DomainError("Output dimensions {} do not match isometry rows {}".format(
            list(output_dims), isometry.shape[0]))

    rest = [k for k in range(len(state.dims)) if k not in targets]
    rest_labels = [state.labels[k] for k in rest]
    clash = set(output_labels) & set(rest_labels)
    if clash:
        raise DomainError("Output labels collide with untouched subsystems: {}".format(sorted(clash)))
    dims = tuple(output_dims) + tuple(state.dims[k] for k in rest)
    labels = output_labels + rest_labels
    d_rest = int(np.prod([state.dims[k] for k in rest])) if rest else 1

    moved = permute(state, target_labels + rest_labels)
    if isinstance(moved, PureStateVector):
        vec = (isometry @ moved.amplitudes.reshape(d_in, d_rest)).reshape(-1)
        return PureStateVector(vec, dims, labels, validate=False)
    t = moved.matrix.reshape(d_in, d_rest, d_in, d_rest)
    out = np.einsum("ia,abcd,jc->ibjd", isometry, t, isometry.conj())
    d_out = isometry.shape[0] * d_rest
    return DensityOperator(out.reshape(d_out, d_out), dims, labels, validate=False)


def stinespring(kraus):
    """Isometry V with V|i> = sum_k K_k|i> (x) |k>, rows ordered (output, environment)"""
    kraus = [np.asarray(k, dtype=complex) for k in kraus]
    if not kraus:
        raise DomainError("Kraus list is empty")
    shape = kraus[0].shape
    if any(k.shape != shape for k in kraus):
        raise DomainError("Kraus operators must share one shape")
    d_out, d_in = shape
    v = np.stack(kraus, axis=1).reshape(d_out * len(kraus), d_in)
    return check_isometry(v), (d_out, len(kraus))


def apply_channel(state, kraus, target_labels, output_label=None):
    """Kraus-form channel on the `target_labels` factors; the output takes one label"""
    target_labels = list(target_labels)
    if output_label is None:
        output_label = target_labels[0]
    v, (d_out, n_kraus) = stinespring(kraus)
    env = "_env"
    while env in state.labels:
        env += "_"
    out = apply_isometry(state, v, target_labels, [output_label, env], [d_out, n_kraus])
    return partial_trace(out, [l for l in out.labels if l != env])


def dephase(state, labels):
    """Computational-basis measurement on the given factors"""
    rho = as_density(state)
    idx = rho.indices(labels)
    n = len(rho.dims)
    mask = np.ones(rho.dims + rho.dims, dtype=bool)
    for k in idx:
        d = rho.dims[k]
        shape = [1] * (2 * n)
        shape[k] = d
        shape[n + k] = d
        mask &= np.eye(d, dtype=bool).reshape(shape)
    t = np.where(mask, rho.matrix.reshape(rho.dims + rho.dims), 0.0)
    return DensityOperator(t.reshape(rho.dim, rho.dim), rho.dims, rho.labels, validate=False)


def basis_state(dims, index, labels=None):
    """Product computational-basis vector |i1 i2 ...>"""
    dims = tuple(dims)
    vec = np.zeros(int(np.prod(dims)), dtype=complex)
    vec[np.ravel_multi_index(tuple(index), dims)] = 1.0
    return PureStateVector(vec, dims, labels)


def maximally_mixed(dims, labels=None):
    d = int(np.prod(dims))
    return DensityOperator(np.eye(d) / d, dims, labels)

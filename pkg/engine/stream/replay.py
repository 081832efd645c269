"""
Module containing the multi-pass replay machinery.

Streaming procedures are written as generators: every `yield` hands over
the list of consumers that must see one physical pass over the stream,
and the generator resumes once that pass is over. `StreamRunner.drive`
executes such a generator and `run_parallel` lets several of them share
the same physical passes.
"""

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from itertools import chain
from fastlog import log
from . import TURNSTILE
from engine.errors.stream import PassBudgetExceeded, ModeMismatch


class Consumer:
    """
    Base class of everything that reads a stream.

    Attributes:
        pass_budget {int} -- Number of passes the consumer may take part in.
        accepts_turnstile {bool} -- Whether deletions are supported.
        passes_done {int} -- Number of passes already consumed.

    """

    pass_budget = 1
    accepts_turnstile = True

    def __init__(self):
        """Initialize the pass counter."""
        self.passes_done = 0

    @property
    def label(self):
        """Name under which the consumer's words are charged."""
        return type(self).__name__

    def begin_pass(self, pass_index):
        """Called before the first event of a pass."""

    def on_event(self, event):
        """
        Process a single stream event.

        Arguments:
            event {StreamEvent} -- The event.

        """
        raise NotImplementedError

    def end_pass(self, pass_index):
        """Called after the last event of a pass."""

    def words(self):
        """Number of machine words held by the consumer."""
        return 0

    def usage(self):
        """Words held per label (composite consumers report their parts)."""
        return {self.label: self.words()}


class FanoutConsumer(Consumer):
    """
    Dispatches every event to the children whose vertex subset contains it.

    Children expose a `vertices` attribute: a set of vertex ids, or None
    when the child wants every event.

    Attributes:
        children {list[Consumer]} -- Consumers sharing the pass.

    """

    def __init__(self, children):
        """
        Index the children by vertex.

        Arguments:
            children {list[Consumer]} -- Consumers sharing the pass.

        """
        super().__init__()

        self.children = list(children)
        self.pass_budget = max((c.pass_budget for c in self.children),
                               default=1)
        self.accepts_turnstile = all(c.accepts_turnstile
                                     for c in self.children)

        self._everything = []
        self._members = []
        self._index = defaultdict(list)

        for i, child in enumerate(self.children):
            vertices = getattr(child, "vertices", None)

            if vertices is None:
                self._everything.append(child)
                self._members.append(None)
                continue

            members = frozenset(vertices)
            self._members.append(members)

            for v in members:
                self._index[v].append(i)

    def begin_pass(self, pass_index):
        """Forward the pass start to every child."""
        for child in self.children:
            if child.passes_done >= child.pass_budget:
                raise PassBudgetExceeded(
                    f"{child.label} has no passes left "
                    f"(budget {child.pass_budget})")

            child.begin_pass(pass_index)

    def on_event(self, event):
        """Hand the event to the children containing both endpoints."""
        for child in self._everything:
            child.on_event(event)

        for i in self._index.get(event.u, ()):
            if event.v in self._members[i]:
                self.children[i].on_event(event)

    def end_pass(self, pass_index):
        """Forward the pass end to every child."""
        for child in self.children:
            child.end_pass(pass_index)
            child.passes_done += 1

    def words(self):
        """Sum of the children's words plus the vertex index."""
        return sum(c.words() for c in self.children) + \
            sum(len(i) for i in self._index.values())

    def usage(self):
        """Children's usage merged per label."""
        merged = defaultdict(int)

        for child in self.children:
            for label, words in child.usage().items():
                merged[label] += words

        merged[self.label] += sum(len(i) for i in self._index.values())
        return dict(merged)


def _feed(events, consumers):
    """Deliver every event in order to each consumer of a chunk."""
    for event in events:
        for consumer in consumers:
            consumer.on_event(event)


def _usage(consumers):
    """Words held per label by a list of consumers."""
    usage = defaultdict(int)

    for consumer in consumers:
        for label, words in consumer.usage().items():
            usage[label] += words

    return dict(usage)


def replay(stream, consumers, pass_index, ledger=None, jobs=1):
    """
    Run one pass of the stream through a list of consumers.

    Every consumer sees every event in stream order. With `jobs > 1`
    the consumers are split into disjoint chunks, each owned by one
    worker thread for the whole pass.

    Arguments:
        stream {Stream} -- Parsed stream.
        consumers {list[Consumer]} -- Consumers registered for this pass.
        pass_index {int} -- Index of the physical pass (1-based).
        ledger {SpaceLedger} -- Optional ledger charged with the words held.
        jobs {int} -- Number of worker threads.

    Raises:
        ModeMismatch -- If an insertion-only consumer meets a turnstile stream.
        PassBudgetExceeded -- If a consumer has no passes left.

    Returns:
        list[Consumer] -- The same consumers, updated.

    """
    for consumer in consumers:
        if stream.header.mode == TURNSTILE and not consumer.accepts_turnstile:
            raise ModeMismatch(
                f"{consumer.label} cannot read a turnstile stream")

        if consumer.passes_done >= consumer.pass_budget:
            raise PassBudgetExceeded(
                f"{consumer.label} asked for pass {consumer.passes_done + 1} "
                f"with a budget of {consumer.pass_budget}")

    if ledger is not None:
        ledger.record(_usage(consumers))

    for consumer in consumers:
        consumer.begin_pass(pass_index)

    if jobs > 1 and len(consumers) > 1:
        chunks = [consumers[i::jobs] for i in range(jobs)]

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            # Consume the iterator so worker exceptions are raised here.
            list(pool.map(lambda chunk: _feed(stream.events, chunk), chunks))
    else:
        _feed(stream.events, consumers)

    for consumer in consumers:
        consumer.end_pass(pass_index)
        consumer.passes_done += 1

    if ledger is not None:
        ledger.record(_usage(consumers))

    return consumers


def run_parallel(*procedures):
    """
    Run several pass procedures so that they share physical passes.

    In every physical pass each unfinished procedure gets its next pass.
    Exceptions raised by a procedure propagate to the caller.

    Arguments:
        procedures {generator} -- Pass procedures (see module docstring).

    Returns:
        list -- Return values of the procedures, in argument order.

    """
    results = [None] * len(procedures)
    pending = {}

    for i, procedure in enumerate(procedures):
        try:
            pending[i] = next(procedure)
        except StopIteration as stop:
            results[i] = stop.value

    while pending:
        yield list(chain.from_iterable(pending.values()))

        for i in list(pending):
            try:
                pending[i] = procedures[i].send(None)
            except StopIteration as stop:
                results[i] = stop.value
                del pending[i]

    return results


class StreamRunner:
    """
    Executes pass procedures over a stream and counts physical passes.

    Attributes:
        stream {Stream} -- The stream being replayed.
        ledger {SpaceLedger} -- Space accounting of the run.
        passes {int} -- Number of physical passes made so far.
        passes_cap {int} -- Maximum number of passes (None: no cap).
        jobs {int} -- Worker threads used by `replay`.

    """

    def __init__(self, stream, ledger=None, passes_cap=None, jobs=1):
        """
        Initialize a new runner.

        See class docstring for details on constructor arguments.
        """
        self.stream = stream
        self.ledger = ledger
        self.passes = 0
        self.passes_cap = passes_cap
        self.jobs = jobs

    def run_pass(self, consumers):
        """
        Make one physical pass for the given consumers.

        An empty consumer list costs nothing.

        Raises:
            PassBudgetExceeded -- If the run is out of passes.

        """
        if not consumers:
            return consumers

        if self.passes_cap is not None and self.passes >= self.passes_cap:
            raise PassBudgetExceeded(
                f"run exceeded its cap of {self.passes_cap} passes")

        self.passes += 1
        log.debug(f"Pass {self.passes}: {len(consumers)} consumer(s)")
        return replay(self.stream, consumers, self.passes,
                      self.ledger, self.jobs)

    def drive(self, procedure):
        """
        Execute a pass procedure to completion.

        Arguments:
            procedure {generator} -- Generator yielding consumer lists.

        Returns:
            object -- The procedure's return value.

        """
        try:
            consumers = next(procedure)

            while True:
                self.run_pass(consumers)
                consumers = procedure.send(None)

        except StopIteration as stop:
            return stop.value

    @contextmanager
    def pass_limit(self, passes):
        """
        Temporarily restrict the run to at most `passes` further passes.

        Arguments:
            passes {int} -- Number of passes allowed inside the block.

        """
        saved = self.passes_cap
        limit = self.passes + passes
        self.passes_cap = limit if saved is None else min(saved, limit)

        try:
            yield
        finally:
            self.passes_cap = saved

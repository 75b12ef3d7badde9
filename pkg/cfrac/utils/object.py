#!/usr/bin/env python
# -*- coding: utf-8 -*-

import threading
import contextlib


class RWLock(object):
    """
    Reader-writer lock, writers first.

    Any number of readers share the lock; a writer holds it alone and waiting
    writers block new readers.
    """

    def __init__(self):
        self.mutex = threading.RLock()
        self.can_read = threading.Semaphore(0)
        self.can_write = threading.Semaphore(0)
        self.active_readers = 0
        self.active_writers = 0
        self.waiting_readers = 0
        self.waiting_writers = 0

    def _acquire_read(self):
        with self.mutex:
            if self.active_writers or self.waiting_writers:
                self.waiting_readers += 1
            else:
                self.active_readers += 1
                self.can_read.release()
        self.can_read.acquire()

    def _release_read(self):
        with self.mutex:
            self.active_readers -= 1
            if not self.active_readers and self.waiting_writers:
                self._wake_writer()

    def _acquire_write(self):
        with self.mutex:
            busy = self.active_writers or self.waiting_writers or self.active_readers
            if busy:
                self.waiting_writers += 1
            else:
                self.active_writers += 1
                self.can_write.release()
        self.can_write.acquire()

    def _release_write(self):
        with self.mutex:
            self.active_writers -= 1
            if self.waiting_writers:
                self._wake_writer()
            elif self.waiting_readers:
                woken, self.waiting_readers = self.waiting_readers, 0
                self.active_readers += woken
                for _ in range(woken):
                    self.can_read.release()

    def _wake_writer(self):
        self.active_writers += 1
        self.waiting_writers -= 1
        self.can_write.release()

    @contextlib.contextmanager
    def reader(self):
        self._acquire_read()
        try:
            yield
        finally:
            self._release_read()

    @contextlib.contextmanager
    def writer(self):
        self._acquire_write()
        try:
            yield
        finally:
            self._release_write()


class LockedMemo(object):
    """
    Process-wide memo table shared between threads.

    Values must be pure functions of their keys, so a race between two
    writers stores the same value twice and nothing else. When the table
    reaches ``max_entries`` it is cleared.
    """

    def __init__(self, name, max_entries=4096):
        self.name = name
        self.max_entries = max_entries
        self._data = {}
        self._lock = RWLock()

    def get(self, key, default=None):
        with self._lock.reader():
            return self._data.get(key, default)

    def __contains__(self, key):
        with self._lock.reader():
            return key in self._data

    def set(self, key, value):
        with self._lock.writer():
            if len(self._data) >= self.max_entries:
                self._data.clear()
            self._data[key] = value
        return value

    def get_or_compute(self, key, compute):
        missing = object()
        value = self.get(key, missing)
        if value is missing:
            value = self.set(key, compute())
        return value

    def clear(self):
        with self._lock.writer():
            self._data.clear()

    def __len__(self):
        with self._lock.reader():
            return len(self._data)

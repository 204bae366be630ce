/**
 * Latest-wins accounting for overlapping requests: responses for requests
 * older than the newest accepted one are discarded, so the view never shows
 * a preview for a window the user already left.
 */
export class RequestSequencer {
  private issued = 0;
  private applied = 0;

  /** Ticket for a request about to be sent. */
  next(): number {
    return ++this.issued;
  }

  /** True (and remembered) iff this response is newer than any shown. */
  accept(ticket: number): boolean {
    if (ticket <= this.applied) return false;
    this.applied = ticket;
    return true;
  }
}

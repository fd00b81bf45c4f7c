// Request discipline for slider-driven panels: trailing-edge debounce
// plus sequence-numbered last-write-wins, so a stale response can never
// overwrite the result of a later interaction.

export const DEBOUNCE_MS = 150;

export function debounce<A extends unknown[]>(
  run: (...args: A) => void,
  waitMs: number = DEBOUNCE_MS,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = undefined;
      run(...args);
    }, waitMs);
  };
}

/**
 * Tags each issued request with a climbing sequence number and invokes
 * the callbacks only when no later request has already settled.
 */
export class LatestWins<T> {
  private issued = 0;
  private rendered = 0;

  async run(
    request: () => Promise<T>,
    onResult: (value: T) => void,
    onError?: (error: unknown) => void,
  ): Promise<void> {
    const sequence = ++this.issued;
    try {
      const value = await request();
      if (sequence > this.rendered) {
        this.rendered = sequence;
        onResult(value);
      }
    } catch (error) {
      if (sequence > this.rendered) {
        this.rendered = sequence;
        onError?.(error);
      }
    }
  }

  get pending(): boolean {
    return this.issued > this.rendered;
  }
}

// storage helper for window records
class WindowTable8
{
    @Capacity(limit=16, grow=2)
    private int windowSize = 3;

    private long chunkMask = -1;

    public int trimWindow( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + windowSize;
    }

    public long scanChunk( boolean dense, int count )
    {
        long mask = chunkMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int splitAll( int[] values, int limit )
    {
        int acc = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            acc = acc + values[i];
        }
        if ( acc < 0 )
        {
            acc = -2;
        }
        return acc;
    }

    public int relay( Visitor probe, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        probe.visit( picked, rounds );
        refresh( probe, true );
        this.windowSize = picked;
        return this.windowSize;
    }

    public void refresh( Visitor probe, boolean dense )
    {
        int mark = dense ? this.windowSize : -1;
        probe.visit( mark, 0 );
        probe.accept( false );
    }

    @Source(kind="window", retries=1)
    public String describe( String owner, double ratio )
    {
        double scaled = (double) windowSize * ratio;
        long wide = (long) scaled;
        return owner + "#" + wide.toString();
    }
}

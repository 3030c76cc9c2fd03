// storage helper for window records
class WindowTable22
{
    @Capacity(limit=16, grow=2)
    private int trackSize = 8;

    private long pageMask = -1;

    public int flushTrack( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + trackSize;
    }

    public long samplePage( boolean dense, int count )
    {
        long mask = pageMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int probeAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -2;
        }
        return total;
    }

    public int relay( Visitor visitor, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        visitor.visit( picked, rounds );
        refresh( visitor, true );
        this.trackSize = picked;
        return this.trackSize;
    }

    public void refresh( Visitor visitor, boolean dense )
    {
        int mark = dense ? this.trackSize : -1;
        visitor.visit( mark, 0 );
        visitor.accept( false );
    }

    @Source(kind="window", retries=2)
    public String describe( String label, double ratio )
    {
        double scaled = (double) trackSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
